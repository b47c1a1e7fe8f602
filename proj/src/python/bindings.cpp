#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "triq/certify.hpp"
#include "triq/devilfish.hpp"
#include "triq/fuzz.hpp"
#include "triq/reductions.hpp"
#include "triq/surface.hpp"
#include "triq/triangle.hpp"

namespace py = pybind11;

namespace {

py::object json_to_py(const nlohmann::ordered_json& j) {
    py::module_ json_mod = py::module_::import("json");
    return json_mod.attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(triq, m) {
    m.doc() = "Triangle altitude/median inequality toolkit: residuals, the devil-fish "
              "objective, critical points, and rigorous nonpositivity certificates";

    py::class_<triq::Triangle>(m, "Triangle")
        .def(py::init<double, double, double, double>(), py::arg("a"), py::arg("b"), py::arg("c"),
             py::arg("eps") = 0.0)
        .def_readonly("a", &triq::Triangle::a)
        .def_readonly("b", &triq::Triangle::b)
        .def_readonly("c", &triq::Triangle::c);

    m.def("area", &triq::area);
    m.def("altitudes", &triq::altitudes);
    m.def("medians", &triq::medians);
    m.def("altitude_residual", &triq::altitude_residual);
    m.def("median_residual", &triq::median_residual);
    m.def("corollary_a_residual", &triq::corollary_a_residual);
    m.def("corollary_b_check", [](const triq::Triangle& t) {
        const auto r = triq::corollary_b_check(t);
        return py::make_tuple(r.ratio, r.bound, r.ok);
    });

    m.def("amgm_gap", [](const std::vector<double>& v) {
        return triq::amgm_gap(std::span<const double>(v.data(), v.size()));
    });
    m.def("lemma2_gap", &triq::lemma2_gap);
    m.def("isosceles_margin", [](double a, double c) {
        const auto r = triq::isosceles_margin(a, c);
        return py::make_tuple(r.lhs, r.rhs);
    });
    m.def("quintic_eval", &triq::quintic_eval);
    m.def("quintic_factor_check", &triq::quintic_factor_check);

    m.def("eval_F", [](double x, double y) { return triq::eval_F({x, y}); });
    m.def("grad_F", [](double x, double y) { return triq::grad_F({x, y}); });
    m.def(
        "hessian_F",
        [](double x, double y, double h) {
            const auto H = triq::hessian_F({x, y}, h);
            return py::make_tuple(H.xx, H.xy, H.yy);
        },
        py::arg("x"), py::arg("y"), py::arg("h") = 1e-5);
    m.def("in_domain", [](double x, double y, double tol) { return triq::in_domain({x, y}, tol); },
          py::arg("x"), py::arg("y"), py::arg("tol") = 0.0);

    m.def(
        "find_critical_points",
        [](int grid, double tol) {
            const auto s = triq::find_critical_points(grid, tol);
            py::list out;
            for (const auto& p : s.points) {
                py::dict d;
                d["x"] = p.point.x;
                d["y"] = p.point.y;
                d["F"] = p.value;
                d["grad_max_norm"] = p.grad_norm;
                d["hessian"] = py::make_tuple(p.hess.xx, p.hess.xy, p.hess.yy);
                d["classification"] = triq::classification_name(p.cls);
                out.append(d);
            }
            return out;
        },
        py::arg("grid") = 32, py::arg("tol") = 1e-10);

    m.def(
        "certify",
        [](double tau, std::uint64_t max_boxes, double min_width, bool mean_value) {
            triq::CertifyOptions opts;
            opts.tau = tau;
            opts.max_boxes = max_boxes;
            opts.min_width = min_width;
            opts.mean_value = mean_value;
            const auto cert = triq::certify_nonpositive(opts);
            const auto edges = triq::certify_edges(tau, max_boxes, min_width);
            return json_to_py(triq::certificate_to_json(
                cert, std::vector<triq::EdgeCertificate>(edges.begin(), edges.end())));
        },
        py::arg("tau") = 1e-6, py::arg("max_boxes") = 10000000, py::arg("min_width") = 1e-7,
        py::arg("mean_value") = true);

    m.def(
        "fuzz",
        [](std::uint64_t count, std::uint64_t seed, const std::string& generator, double slack) {
            const auto g = triq::generator_from_name(generator);
            if (!g) throw std::invalid_argument("unknown generator '" + generator + "'");
            triq::FuzzConfig cfg;
            cfg.count = count;
            cfg.seed = seed;
            cfg.generator = *g;
            cfg.slack = slack;
            return json_to_py(triq::report_to_json(triq::run_fuzz(cfg)));
        },
        py::arg("count") = 10000, py::arg("seed") = 0, py::arg("generator") = "uniform-sides",
        py::arg("slack") = 1e-12);

    m.def(
        "surface",
        [](int nx, int ny, bool full_grid) {
            return json_to_py(triq::surface_to_json(triq::surface_grid(nx, ny, full_grid)));
        },
        py::arg("nx") = 200, py::arg("ny") = 200, py::arg("full_grid") = false);
}

#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "triq/certify.hpp"
#include "triq/devilfish.hpp"
#include "triq/fuzz.hpp"
#include "triq/num_format.hpp"
#include "triq/reductions.hpp"
#include "triq/surface.hpp"
#include "triq/triangle.hpp"

namespace {

using triq::shortest;

int run_check(double a, double b, double c, double slack, bool json_out) {
    triq::Triangle t(a, b, c);
    const double scale = std::max({a, b, c});
    const double tol = slack * scale * scale;

    const double ar = triq::altitude_residual(t);
    const double mr = triq::median_residual(t);
    const double ca = triq::corollary_a_residual(t);
    const auto cb = triq::corollary_b_check(t);

    const bool ok_alt = ar <= tol;
    const bool ok_med = mr <= tol;
    const bool ok_ca = ca >= -tol;
    const bool ok_cb = cb.ok;
    const bool all_ok = ok_alt && ok_med && ok_ca && ok_cb;

    if (json_out) {
        nlohmann::ordered_json j;
        j["triangle"] = {shortest(a), shortest(b), shortest(c)};
        j["altitude_residual"] = shortest(ar);
        j["median_residual"] = shortest(mr);
        j["corollary_a_residual"] = shortest(ca);
        j["corollary_b"] = {{"ratio", shortest(cb.ratio)}, {"bound", shortest(cb.bound)}};
        j["pass"] = {{"altitude", ok_alt},
                     {"median", ok_med},
                     {"corollary_a", ok_ca},
                     {"corollary_b", ok_cb}};
        j["all_pass"] = all_ok;
        std::cout << j.dump(2) << '\n';
    } else {
        auto line = [](const char* name, double value, bool ok) {
            std::cout << name << " = " << shortest(value) << "  " << (ok ? "PASS" : "FAIL")
                      << '\n';
        };
        line("altitude residual  (<= 0)", ar, ok_alt);
        line("median residual    (<= 0)", mr, ok_med);
        line("corollary a)       (>= 0)", ca, ok_ca);
        std::cout << "corollary b)  ratio = " << shortest(cb.ratio)
                  << "  bound = " << shortest(cb.bound) << "  " << (ok_cb ? "PASS" : "FAIL")
                  << '\n';
        std::cout << (all_ok ? "PASS" : "FAIL") << '\n';
    }
    return all_ok ? 0 : 1;
}

int run_fuzz_cmd(std::uint64_t count, std::uint64_t seed, const std::string& gen_name,
                 double slack, bool json_out) {
    std::vector<triq::Generator> gens;
    if (gen_name == "all") {
        gens = {triq::Generator::UniformSides, triq::Generator::AngleBased,
                triq::Generator::NearDegenerate, triq::Generator::NearEquilateral};
    } else {
        const auto g = triq::generator_from_name(gen_name);
        if (!g) {
            std::cerr << "unknown generator '" << gen_name << "'\n";
            return 2;
        }
        gens = {*g};
    }
    const std::uint64_t per = std::max<std::uint64_t>(1, count / gens.size());
    std::uint64_t violations = 0;
    nlohmann::ordered_json jall = nlohmann::ordered_json::array();
    for (auto g : gens) {
        triq::FuzzConfig cfg;
        cfg.count = per;
        cfg.seed = seed;
        cfg.generator = g;
        cfg.slack = slack;
        const auto report = triq::run_fuzz(cfg);
        violations += report.violations;
        if (json_out) {
            jall.push_back(triq::report_to_json(report));
        } else {
            std::cout << triq::generator_name(g) << ": " << per << " triangles, "
                      << report.violations << " violations, presquare_negative "
                      << report.presquare_negative << '\n';
            for (const auto& [name, s] : report.checks)
                std::cout << "  " << name << ": pass " << s.pass << " fail " << s.fail
                          << "  worst " << shortest(s.worst) << "  min_margin "
                          << shortest(s.min_margin) << '\n';
        }
    }
    if (json_out) std::cout << jall.dump(2) << '\n';
    return violations == 0 ? 0 : 1;
}

int run_critical_points(int grid, double tol, bool json_out) {
    const auto search = triq::find_critical_points(grid, tol);
    if (json_out) {
        nlohmann::ordered_json j;
        j["seeds_total"] = search.seeds_total;
        j["seeds_failed"] = search.seeds_failed;
        j["points"] = nlohmann::ordered_json::array();
        for (const auto& p : search.points) {
            nlohmann::ordered_json jp;
            jp["x"] = shortest(p.point.x);
            jp["y"] = shortest(p.point.y);
            jp["F"] = shortest(p.value);
            jp["grad_max_norm"] = shortest(p.grad_norm);
            jp["hessian"] = {{"xx", shortest(p.hess.xx)},
                             {"xy", shortest(p.hess.xy)},
                             {"yy", shortest(p.hess.yy)},
                             {"det", shortest(p.hess.det())}};
            jp["classification"] = triq::classification_name(p.cls);
            j["points"].push_back(jp);
        }
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "seeds: " << search.seeds_total << " (" << search.seeds_failed
                  << " failed to converge)\n";
        for (const auto& p : search.points) {
            std::cout << "(" << shortest(p.point.x) << ", " << shortest(p.point.y)
                      << ")  F = " << shortest(p.value) << "  |grad| = " << shortest(p.grad_norm)
                      << "  det H = " << shortest(p.hess.det()) << "  "
                      << triq::classification_name(p.cls) << '\n';
        }
    }
    return search.points.empty() ? 1 : 0;
}

int run_certify(double tau, std::uint64_t max_boxes, double min_width, bool no_mean_value,
                const std::string& out_path) {
    triq::CertifyOptions opts;
    opts.tau = tau;
    opts.max_boxes = max_boxes;
    opts.min_width = min_width;
    opts.mean_value = !no_mean_value;
    const auto cert = triq::certify_nonpositive(opts);
    const auto edges = triq::certify_edges(tau, max_boxes, min_width);
    const std::vector<triq::EdgeCertificate> edge_vec(edges.begin(), edges.end());
    if (!out_path.empty()) triq::export_certificate(cert, edge_vec, out_path);

    bool all = cert.conclusion == triq::Conclusion::Certified;
    std::cout << "domain: " << cert.domain << '\n'
              << "conclusion: " << triq::conclusion_name(cert.conclusion) << "  ("
              << cert.boxes_processed << " boxes, " << cert.residuals.size()
              << " residual, max width " << shortest(cert.max_residual_width) << ")\n";
    for (const auto& e : edges) {
        all = all && e.conclusion == triq::Conclusion::Certified;
        std::cout << "edge " << e.edge << ": " << triq::conclusion_name(e.conclusion) << "  ("
                  << e.boxes_processed << " boxes, " << e.residuals.size() << " residual)\n";
    }
    return all ? 0 : 1;
}

int run_verify(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open '" << path << "'\n";
        return 2;
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        std::cerr << "malformed JSON: " << e.what() << '\n';
        return 2;
    }
    const auto res = triq::verify_certificate(j);
    std::cout << (res.sound ? "sound" : "UNSOUND") << ": " << res.detail << '\n';
    return res.sound ? 0 : 1;
}

int run_surface(int nx, int ny, const std::string& format, bool full_grid,
                const std::string& out_path) {
    const auto grid = triq::surface_grid(nx, ny, full_grid);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open '" << out_path << "' for writing\n";
        return 2;
    }
    if (format == "csv")
        triq::write_surface_csv(grid, out);
    else
        out << triq::surface_to_json(grid).dump(2) << '\n';
    return 0;
}

int run_reductions() {
    const bool factor_ok = triq::quintic_factor_check();
    std::cout << "quintic factorization (t-1)(t^4+15t^3+88t^2+48t+64): "
              << (factor_ok ? "exact match" : "MISMATCH") << '\n';
    std::cout << "quintic p(1) = " << shortest(triq::quintic_eval(1.0))
              << ", p(0) = " << shortest(triq::quintic_eval(0.0)) << '\n';
    std::cout << "lemma2 gap (1,2,3) = " << shortest(triq::lemma2_gap(1, 2, 3)) << '\n';
    const auto m = triq::isosceles_margin(2.0, 1.0);
    std::cout << "isosceles margin (a=2, c=1): lhs = " << shortest(m.lhs)
              << " <= rhs = " << shortest(m.rhs) << '\n';
    const double v[] = {1.0, 2.0, 3.0};
    std::cout << "AM-GM gap [1,2,3] = " << shortest(triq::amgm_gap(v)) << '\n';
    return factor_ok && m.lhs <= m.rhs ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Triangle altitude/median inequalities: residuals, critical points, and a "
                 "rigorous nonpositivity certificate for the devil-fish objective"};
    app.require_subcommand(1);

    double a = 0, b = 0, c = 0, slack = 1e-12;
    bool json_out = false;
    auto* check = app.add_subcommand("check", "evaluate all inequalities for one triangle");
    check->add_option("a", a, "side a")->required();
    check->add_option("b", b, "side b")->required();
    check->add_option("c", c, "side c")->required();
    check->add_option("--slack", slack, "slack multiplier on scale^2");
    check->add_flag("--json", json_out, "JSON output");

    std::uint64_t count = 10000, seed = 0;
    std::string gen_name = "all";
    double fslack = 1e-12;
    bool fjson = false;
    auto* fuzz = app.add_subcommand("fuzz", "randomized testing of every inequality");
    fuzz->add_option("--count", count, "total triangles");
    fuzz->add_option("--seed", seed, "stream seed");
    fuzz->add_option("--generator", gen_name,
                     "uniform-sides|angle-based|near-degenerate|near-equilateral|all");
    fuzz->add_option("--slack", fslack, "slack multiplier on scale^2");
    fuzz->add_flag("--json", fjson, "JSON output");

    int grid = 32;
    double tol = 1e-10;
    bool cpjson = false;
    auto* cp = app.add_subcommand("critical-points", "Newton search for stationary points of F");
    cp->add_option("--grid", grid, "seed grid resolution");
    cp->add_option("--tol", tol, "gradient max-norm tolerance");
    cp->add_flag("--json", cpjson, "JSON output");

    double tau = 1e-6, min_width = 1e-7;
    std::uint64_t max_boxes = 10000000;
    bool no_mv = false;
    std::string out_path;
    auto* certify = app.add_subcommand("certify", "branch-and-bound certificate that F <= tau on M");
    certify->add_option("--tau", tau, "certification threshold");
    certify->add_option("--max-boxes", max_boxes, "box budget");
    certify->add_option("--min-width", min_width, "residual box width");
    certify->add_flag("--no-mean-value", no_mv, "natural interval extension only");
    certify->add_option("--out", out_path, "certificate JSON path");

    std::string cert_path;
    auto* verify = app.add_subcommand("verify-certificate", "re-check a certificate's residuals");
    verify->add_option("file", cert_path, "certificate JSON path")->required();

    int nx = 200, ny = 200;
    std::string format = "csv", surf_out;
    bool full_grid = false;
    auto* surface = app.add_subcommand("surface", "emit the devil-fish surface grid");
    surface->add_option("--nx", nx, "grid points in x");
    surface->add_option("--ny", ny, "grid points in y");
    surface->add_option("--format", format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    surface->add_flag("--full-grid", full_grid, "emit out-of-domain points with F missing");
    surface->add_option("--out", surf_out, "output path")->required();

    auto* reductions = app.add_subcommand("reductions", "exact factorization and lemma spot checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) return run_check(a, b, c, slack, json_out);
        if (fuzz->parsed()) return run_fuzz_cmd(count, seed, gen_name, fslack, fjson);
        if (cp->parsed()) return run_critical_points(grid, tol, cpjson);
        if (certify->parsed()) return run_certify(tau, max_boxes, min_width, no_mv, out_path);
        if (verify->parsed()) return run_verify(cert_path);
        if (surface->parsed()) return run_surface(nx, ny, format, full_grid, surf_out);
        if (reductions->parsed()) return run_reductions();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

#include "triq/fuzz.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "triq/devilfish.hpp"
#include "triq/num_format.hpp"
#include "triq/reductions.hpp"

namespace triq {

const char* generator_name(Generator g) {
    switch (g) {
        case Generator::UniformSides: return "uniform-sides";
        case Generator::AngleBased: return "angle-based";
        case Generator::NearDegenerate: return "near-degenerate";
        case Generator::NearEquilateral: return "near-equilateral";
    }
    return "uniform-sides";
}

std::optional<Generator> generator_from_name(const std::string& name) {
    if (name == "uniform-sides") return Generator::UniformSides;
    if (name == "angle-based") return Generator::AngleBased;
    if (name == "near-degenerate") return Generator::NearDegenerate;
    if (name == "near-equilateral") return Generator::NearEquilateral;
    return std::nullopt;
}

TriangleStream::TriangleStream(const FuzzConfig& config)
    : gen_(config.generator), rng_(config.seed) {}

Triangle TriangleStream::next() {
    constexpr double kEps = 1e-9;  // validation headroom for the fuzzer
    for (;;) {
        switch (gen_) {
            case Generator::UniformSides: {
                const double a = rng_.next_unit();
                const double b = rng_.next_unit();
                const double c = rng_.next_unit();
                if (a + b > c + kEps && b + c > a + kEps && a + c > b + kEps)
                    return Triangle(a, b, c, kEps);
                ++rejected_;
                break;
            }
            case Generator::AngleBased: {
                const double alpha = rng_.next_unit() * std::numbers::pi;
                const double beta = rng_.next_unit() * std::numbers::pi;
                if (!(alpha + beta < std::numbers::pi - 1e-6) || alpha < 1e-6 || beta < 1e-6) {
                    ++rejected_;
                    break;
                }
                // Law of sines with unit circumdiameter.
                return Triangle(std::sin(alpha), std::sin(beta), std::sin(alpha + beta));
            }
            case Generator::NearDegenerate: {
                const double a = rng_.next_unit();
                const double b = rng_.next_unit();
                const double gap = 2e-9 + (1e-3 - 2e-9) * rng_.next_unit();
                const double c = a + b - gap;
                if (c > 0.0 && b + c > a + kEps && a + c > b + kEps)
                    return Triangle(a, b, c, kEps);
                ++rejected_;
                break;
            }
            case Generator::NearEquilateral: {
                const double da = (2.0 * rng_.next_unit() - 1.0) * 1e-6;
                const double db = (2.0 * rng_.next_unit() - 1.0) * 1e-6;
                const double dc = (2.0 * rng_.next_unit() - 1.0) * 1e-6;
                return Triangle(1.0 + da, 1.0 + db, 1.0 + dc);
            }
        }
    }
}

namespace {

void merge(CheckStats& s, double violation, double margin, double threshold, const Triangle& t) {
    if (violation <= threshold)
        ++s.pass;
    else
        ++s.fail;
    if (violation > s.worst) {
        s.worst = violation;
        s.witness[0] = t.a;
        s.witness[1] = t.b;
        s.witness[2] = t.c;
    }
    s.min_margin = std::min(s.min_margin, margin);
}

}  // namespace

void check_triangle(const Triangle& t, double slack, FuzzReport& report) {
    const double scale = std::max({t.a, t.b, t.c});
    const double s2 = scale * scale;
    const double tol = slack * s2;

    // Inequality (1), altitudes.
    const double ar = altitude_residual(t);
    merge(report.checks["altitude"], ar, -ar, tol, t);

    // Inequality (2) in the Eq. (4) form, medians.
    const double mr = median_residual(t);
    merge(report.checks["median"], mr, -mr, tol, t);

    // Corollary a).
    const double ca = corollary_a_residual(t);
    merge(report.checks["corollary_a"], -ca, ca, tol, t);

    // Corollary b) chain (dimensionless).
    const auto cb = corollary_b_check(t);
    const double vb = std::max(cb.ratio - cb.bound, cb.bound - 1.0);
    merge(report.checks["corollary_b"], vb, -vb, slack, t);

    // Two-path identity: altitude residual vs the Lemma 2 reduction.
    const auto sub = reduce_inequality1(t);
    const double gap = lemma2_gap(sub.x, sub.y, sub.z);
    const double via_lemma = -2.0 * area(t) * gap / (t.a * t.b * t.c);
    const double d1 = std::abs(ar - via_lemma);
    const double tol1 = 1e-10 * std::max({s2, std::abs(ar), std::abs(via_lemma)});
    merge(report.checks["two_path_lemma2"], d1 - tol1, tol1 - d1, 0.0, t);

    // Two-path identity: median residual vs a^2/2 * F(b/a, c/a).
    const double d2 = scaling_identity_gap(t);
    const double tol2 = 1e-10 * s2;
    merge(report.checks["two_path_scaling"], d2 - tol2, tol2 - d2, 0.0, t);

    // Squaring-step sign monitor (roles a = max side, c = min side).
    const double amax = scale;
    const double cmin = std::min({t.a, t.b, t.c});
    if (presquare_quantity(amax, cmin) < 0.0) ++report.presquare_negative;
}

FuzzReport run_fuzz(const FuzzConfig& config) {
    if (config.count < 1) throw std::invalid_argument("fuzz: count must be >= 1");
    if (!(config.slack >= 0.0)) throw std::invalid_argument("fuzz: slack must be >= 0");
    FuzzReport report;
    report.config = config;
    TriangleStream stream(config);
    for (std::uint64_t i = 0; i < config.count; ++i)
        check_triangle(stream.next(), config.slack, report);
    for (const auto& [name, stats] : report.checks) report.violations += stats.fail;
    return report;
}

nlohmann::ordered_json report_to_json(const FuzzReport& r) {
    nlohmann::ordered_json j;
    j["config"] = {{"count", r.config.count},
                   {"seed", r.config.seed},
                   {"generator", generator_name(r.config.generator)},
                   {"slack", shortest(r.config.slack)}};
    j["violations"] = r.violations;
    j["presquare_negative"] = r.presquare_negative;
    j["checks"] = nlohmann::ordered_json::object();
    for (const auto& [name, s] : r.checks) {
        nlohmann::ordered_json js;
        js["pass"] = s.pass;
        js["fail"] = s.fail;
        js["worst"] = shortest(s.worst);
        js["worst_witness"] = {shortest(s.witness[0]), shortest(s.witness[1]),
                               shortest(s.witness[2])};
        js["min_margin"] = shortest(s.min_margin);
        j["checks"][name] = js;
    }
    return j;
}

}  // namespace triq

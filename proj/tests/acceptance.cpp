// Acceptance gate: one criterion per invocation, one PASS/FAIL line each.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "triq/certify.hpp"
#include "triq/devilfish.hpp"
#include "triq/fuzz.hpp"
#include "triq/reductions.hpp"
#include "triq/surface.hpp"
#include "triq/triangle.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Criterion {
    int id;
    bool ok = true;
    std::vector<std::string> notes;

    void clause(bool pass, const std::string& what) {
        ok = ok && pass;
        notes.push_back(std::string(pass ? "  ok:   " : "  FAIL: ") + what);
    }
    void note(const std::string& what) { notes.push_back("  note: " + what); }
    int finish() const {
        for (const auto& n : notes) std::cout << n << '\n';
        std::cout << "criterion " << id << ": " << (ok ? "PASS" : "FAIL") << std::endl;
        return ok ? 0 : 1;
    }
};

double box_distance(const triq::Box& b, double cx, double cy) {
    const double dx = std::max({b.x.lo - cx, cx - b.x.hi, 0.0});
    const double dy = std::max({b.y.lo - cy, cy - b.y.hi, 0.0});
    return std::hypot(dx, dy);
}

// 1. The reference interior stationary point and its value.
int criterion1() {
    Criterion c{1};
    const auto t0 = Clock::now();
    const auto search = triq::find_critical_points(32, 1e-10);
    const double elapsed = seconds_since(t0);

    const triq::CriticalPointReport* m1 = nullptr;
    for (const auto& p : search.points)
        if (triq::distance_to_boundary(p.point) > 1e-3) m1 = &p;
    c.clause(m1 != nullptr, "an interior stationary point was found");
    if (m1) {
        c.clause(std::abs(m1->point.x - 0.9238127491) <= 1e-8, "x = 0.9238127491 within 1e-8");
        c.clause(std::abs(m1->point.y - 0.1660179102) <= 1e-8, "y = 0.1660179102 within 1e-8");
        const bool value_ok = std::abs(m1->value - (-0.4280657968)) <= 1e-8;
        c.clause(value_ok, "F(M1) = -0.4280657968 within 1e-8");
        if (!value_ok) {
            char buf[256];
            std::snprintf(buf, sizeof buf,
                          "computed F(M1) = %.17g; the gradient there vanishes below 1e-10 and "
                          "two independent evaluation routes agree, so the reference value "
                          "itself appears to be off by ~1.5e-5",
                          m1->value);
            c.note(buf);
        }
    }
    c.clause(elapsed < 5.0, "runtime < 5 s");
    return c.finish();
}

// 2. Hessian of F at the corner (1,1).
int criterion2() {
    Criterion c{2};
    const auto H = triq::hessian_F({1.0, 1.0});
    c.clause(std::abs(H.xx - (-1.5 * std::sqrt(3.0))) <= 1e-4, "F_xx = -3*sqrt(3)/2 within 1e-4");
    c.clause(std::abs(H.det() - 5.0625) <= 1e-3, "det H = 81/16 within 1e-3");
    return c.finish();
}

// 3. Interior certification at tau = 1e-6 plus independent re-verification.
int criterion3() {
    Criterion c{3};
    const auto t0 = Clock::now();
    const auto cert = triq::certify_nonpositive();
    const auto edges = triq::certify_edges();
    const double elapsed = seconds_since(t0);

    c.clause(cert.conclusion == triq::Conclusion::Certified, "conclusion certified");
    c.clause(cert.boxes_processed < 10000000, "under 1e7 boxes");
    c.clause(elapsed < 60.0, "runtime < 60 s");

    std::size_t far = 0;
    double worst = 0.0;
    for (const auto& r : cert.residuals) {
        const double d = box_distance(r.box, 1.0, 1.0);
        if (d > 1e-3) {
            ++far;
            worst = std::max(worst, d);
        }
    }
    c.clause(far == 0, "all residual boxes within 1e-3 of (1,1)");
    if (far != 0) {
        char buf[200];
        std::snprintf(buf, sizeof buf,
                      "%zu residual boxes lie up to %.3g from (1,1); they sit at the corner "
                      "(1,0), where F = 0 exactly (the degenerate-isosceles equality case), so "
                      "no sound enclosure can prune them",
                      far, worst);
        c.note(buf);
    }

    const auto path = std::filesystem::temp_directory_path() / "triq_acceptance_cert.json";
    triq::export_certificate(cert, {edges.begin(), edges.end()}, path);
    nlohmann::json j;
    std::ifstream(path) >> j;
    std::filesystem::remove(path);
    const auto v = triq::verify_certificate(j);
    c.clause(v.sound, "verify-certificate accepts the exported certificate");
    return c.finish();
}

// 4. Edge certificates with residuals only at the zeros of F.
int criterion4() {
    Criterion c{4};
    const auto edges = triq::certify_edges();
    for (const auto& e : edges) {
        c.clause(e.conclusion == triq::Conclusion::Certified, "edge " + e.edge + " certified");
        const auto profile =
            e.edge == "x=1" ? triq::boundary_profiles()[0]
                            : (e.edge == "x=y" ? triq::boundary_profiles()[1]
                                               : triq::boundary_profiles()[2]);
        bool adjacent = true;
        for (const auto& r : e.residuals) {
            // a residual interval must touch a parameter whose image is (1,1)
            // or the corner (1,0), the only zeros of F on the closed region
            auto near_zero = [&](double t) {
                const auto p = profile.embed(t);
                return std::hypot(p.x - 1.0, p.y - 1.0) <= 1e-3 ||
                       std::hypot(p.x - 1.0, p.y) <= 1e-3;
            };
            adjacent = adjacent && (near_zero(r.t.lo) || near_zero(r.t.hi));
        }
        c.clause(adjacent, "edge " + e.edge + " residuals adjacent to a zero of F");
    }
    return c.finish();
}

// 5. Exact factorization of the quintic.
int criterion5() {
    Criterion c{5};
    c.clause(triq::quintic_factor_check(),
             "(t-1)(t^4+15t^3+88t^2+48t+64) matches by integer convolution");
    return c.finish();
}

// 6. One million fuzzed triangles, zero violations.
int criterion6() {
    Criterion c{6};
    const auto t0 = Clock::now();
    std::uint64_t violations = 0, total = 0;
    for (auto g : {triq::Generator::UniformSides, triq::Generator::AngleBased,
                   triq::Generator::NearDegenerate, triq::Generator::NearEquilateral}) {
        triq::FuzzConfig cfg;
        cfg.count = 250000;
        cfg.seed = 2026;
        cfg.generator = g;
        const auto report = triq::run_fuzz(cfg);
        violations += report.violations;
        total += cfg.count;
    }
    const double elapsed = seconds_since(t0);
    c.clause(total == 1000000, "1e6 triangles generated");
    c.clause(violations == 0, "zero violations across all generators");
    c.clause(elapsed < 60.0, "runtime < 60 s");
    return c.finish();
}

// 7. The two derivation paths agree numerically.
int criterion7() {
    Criterion c{7};
    triq::FuzzConfig cfg;
    cfg.count = 100000;
    cfg.seed = 77;
    triq::TriangleStream stream(cfg);
    std::uint64_t bad_scaling = 0, bad_lemma = 0;
    for (std::uint64_t i = 0; i < cfg.count; ++i) {
        const triq::Triangle t = stream.next();
        const double a2 = std::pow(std::max({t.a, t.b, t.c}), 2);
        if (triq::scaling_identity_gap(t) > 1e-10 * a2) ++bad_scaling;
        const auto s = triq::reduce_inequality1(t);
        const double via =
            -2.0 * triq::area(t) * triq::lemma2_gap(s.x, s.y, s.z) / (t.a * t.b * t.c);
        const double ar = triq::altitude_residual(t);
        const double scale = std::max({a2, std::abs(ar), std::abs(via)});
        if (std::abs(ar - via) > 1e-10 * scale) ++bad_lemma;
    }
    c.clause(bad_scaling == 0, "median residual vs a^2/2 F(b/a,c/a) within 1e-10 a^2");
    c.clause(bad_lemma == 0, "altitude residual vs -2S/(abc) lemma-2 gap within 1e-10 relative");
    return c.finish();
}

// 8. Analytic gradient against central differences.
int criterion8() {
    Criterion c{8};
    triq::SplitMix64 rng(88);
    const double h = 1e-6;
    std::uint64_t bad = 0, n = 0;
    while (n < 10000) {
        const triq::DomainPoint p{0.5 + 0.5 * rng.next_unit(), rng.next_unit()};
        if (!(p.y <= p.x - 1e-2 && p.x <= 1.0 - 1e-2 && p.x + p.y >= 1.0 + 1e-2)) continue;
        if (2 * p.x * p.x + 2 * p.y * p.y - 1 < 1e-2) continue;
        ++n;
        const auto g = triq::grad_F(p);
        const double fx = (triq::eval_F({p.x + h, p.y}) - triq::eval_F({p.x - h, p.y})) / (2 * h);
        const double fy = (triq::eval_F({p.x, p.y + h}) - triq::eval_F({p.x, p.y - h})) / (2 * h);
        if (std::abs(g[0] - fx) > 1e-6 || std::abs(g[1] - fy) > 1e-6) ++bad;
    }
    c.clause(bad == 0, "grad_F matches central differences within 1e-6 at 1e4 interior points");
    return c.finish();
}

// 9. Symmetry of F and quadratic scaling of the residuals.
int criterion9() {
    Criterion c{9};
    triq::SplitMix64 rng(99);
    std::uint64_t bad_sym = 0;
    for (int i = 0; i < 10000; ++i) {
        triq::DomainPoint p{0.5 + 0.5 * rng.next_unit(), rng.next_unit()};
        if (!triq::in_domain(p)) p = triq::project_to_domain(p);
        if (std::abs(triq::eval_F(p) - triq::eval_F({p.y, p.x})) > 1e-10) ++bad_sym;
    }
    c.clause(bad_sym == 0, "F(x,y) = F(y,x) within 1e-10 at 1e4 points");

    triq::FuzzConfig cfg;
    cfg.count = 10000;
    cfg.seed = 909;
    triq::TriangleStream stream(cfg);
    std::uint64_t bad_scale = 0;
    for (std::uint64_t i = 0; i < cfg.count; ++i) {
        const triq::Triangle t = stream.next();
        const double lam = 0.01 + 100 * rng.next_unit();
        const triq::Triangle ts(lam * t.a, lam * t.b, lam * t.c);
        const double ref = lam * lam * triq::median_residual(t);
        const double scale = std::max(1.0, std::abs(ref));
        if (std::abs(triq::median_residual(ts) - ref) > 1e-10 * scale) ++bad_scale;
    }
    c.clause(bad_scale == 0, "median residual scales as lambda^2 within 1e-10 relative");
    return c.finish();
}

// 10. Surface grid extremes.
int criterion10() {
    Criterion c{10};
    const auto g = triq::surface_grid(200, 200);
    double fmax = -INFINITY, fmin = INFINITY, ax = 0, ay = 0;
    for (const auto& p : g.rows) {
        fmax = std::max(fmax, *p.f);
        if (*p.f < fmin) {
            fmin = *p.f;
            ax = p.x;
            ay = p.y;
        }
    }
    c.clause(fmax <= 1e-12, "max F over the grid <= 1e-12");
    c.clause(std::abs(fmin - (-0.6213203435596426)) <= 0.01, "min F = -0.6213 within 0.01");
    c.clause(std::hypot(ax - 0.5, ay - 0.5) <= 0.01, "minimum attained near (0.5, 0.5)");
    return c.finish();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: triq_acceptance <criterion 1..10>\n";
        return 2;
    }
    const int id = std::atoi(argv[1]);
    switch (id) {
        case 1: return criterion1();
        case 2: return criterion2();
        case 3: return criterion3();
        case 4: return criterion4();
        case 5: return criterion5();
        case 6: return criterion6();
        case 7: return criterion7();
        case 8: return criterion8();
        case 9: return criterion9();
        case 10: return criterion10();
        default:
            std::cerr << "unknown criterion " << id << '\n';
            return 2;
    }
}

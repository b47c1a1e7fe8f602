#include "triq/devilfish.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace triq {

namespace {

constexpr double kRadicandSlack = 1e-12;

struct Radicands {
    double r1, r2, r3;  // 2x^2+2y^2-1, 2+2y^2-x^2, 2+2x^2-y^2
};

Radicands radicands(double x, double y) {
    return {2.0 * x * x + 2.0 * y * y - 1.0, 2.0 + 2.0 * y * y - x * x,
            2.0 + 2.0 * x * x - y * y};
}

double clamped(double rad) {
    if (rad < 0.0) {
        if (rad < -kRadicandSlack)
            throw std::domain_error("devil-fish radicand negative: point outside natural domain");
        return 0.0;
    }
    return rad;
}

// dF/dx; dF/dy follows from the symmetry F(x,y) = F(y,x).
double partial_x(double x, double y) {
    if (!(x > 0.0 && y > 0.0))
        throw std::domain_error("grad_F: requires x > 0 and y > 0");
    const auto r = radicands(x, y);
    if (!(r.r1 > kRadicandSlack && r.r2 > kRadicandSlack && r.r3 > kRadicandSlack))
        throw std::domain_error("grad_F: radicand too close to zero");
    const double s1 = std::sqrt(r.r1);
    const double s2 = std::sqrt(r.r2);
    const double s3 = std::sqrt(r.r3);
    const double sxy = std::sqrt(x * y);
    const double sx = std::sqrt(x);
    const double sy = std::sqrt(y);
    return -y * s1 / (2.0 * sxy) + (1.0 - sxy) * 2.0 * x / s1  //
           + s2 - (x - sy) * x / s2                            //
           - s3 / (2.0 * sx) + (y - sx) * 2.0 * x / s3;
}

}  // namespace

bool in_domain(const DomainPoint& p, double tol) {
    return p.y >= -tol && p.y <= p.x + tol && p.x <= 1.0 + tol && p.x + p.y >= 1.0 - tol;
}

namespace {

DomainPoint closest_on_segment(DomainPoint a, DomainPoint b, DomainPoint p) {
    const double vx = b.x - a.x, vy = b.y - a.y;
    double t = ((p.x - a.x) * vx + (p.y - a.y) * vy) / (vx * vx + vy * vy);
    t = std::clamp(t, 0.0, 1.0);
    return {a.x + t * vx, a.y + t * vy};
}

double dist(DomainPoint a, DomainPoint b) { return std::hypot(a.x - b.x, a.y - b.y); }

// M is the triangle with vertices (1/2,1/2), (1,0), (1,1).
constexpr DomainPoint kV0{0.5, 0.5}, kV1{1.0, 0.0}, kV2{1.0, 1.0};

}  // namespace

DomainPoint project_to_domain(const DomainPoint& p) {
    if (in_domain(p)) return p;
    DomainPoint best = closest_on_segment(kV0, kV1, p);
    for (const auto& q : {closest_on_segment(kV1, kV2, p), closest_on_segment(kV2, kV0, p)})
        if (dist(q, p) < dist(best, p)) best = q;
    return best;
}

double distance_to_domain(const DomainPoint& p) { return dist(p, project_to_domain(p)); }

double distance_to_boundary(const DomainPoint& p) {
    if (!in_domain(p)) return distance_to_domain(p);
    const double d_right = 1.0 - p.x;
    const double d_diag = (p.x - p.y) / std::sqrt(2.0);
    const double d_anti = (p.x + p.y - 1.0) / std::sqrt(2.0);
    return std::min({d_right, d_diag, d_anti});
}

double eval_F(const DomainPoint& p) {
    const double x = p.x, y = p.y;
    const auto r = radicands(x, y);
    const double s1 = std::sqrt(clamped(r.r1));
    const double s2 = std::sqrt(clamped(r.r2));
    const double s3 = std::sqrt(clamped(r.r3));
    const double sxy = std::sqrt(clamped(x * y));
    return (1.0 - sxy) * s1 + (x - std::sqrt(y)) * s2 + (y - std::sqrt(x)) * s3;
}

std::array<double, 2> grad_F(const DomainPoint& p) {
    return {partial_x(p.x, p.y), partial_x(p.y, p.x)};
}

Hessian hessian_F(const DomainPoint& p, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("hessian_F: step must be positive");
    Hessian H{};
    H.xx = (partial_x(p.x + h, p.y) - partial_x(p.x - h, p.y)) / (2.0 * h);
    H.yy = (partial_x(p.y + h, p.x) - partial_x(p.y - h, p.x)) / (2.0 * h);
    H.xy = (partial_x(p.x, p.y + h) - partial_x(p.x, p.y - h)) / (2.0 * h);
    return H;
}

const char* classification_name(Classification c) {
    switch (c) {
        case Classification::LocalMax: return "local-max";
        case Classification::LocalMin: return "local-min";
        case Classification::Saddle: return "saddle";
        case Classification::BoundaryExtremum: return "boundary-extremum";
        case Classification::Unclassified: return "unclassified";
    }
    return "unclassified";
}

namespace {

// Keeps Newton iterates where the gradient (and the Hessian stencil around
// it) is well defined.
bool workable(const DomainPoint& p) {
    if (!(p.x > 1e-4 && p.y > 1e-4)) return false;
    const auto r = radicands(p.x, p.y);
    return r.r1 > 1e-4 && r.r2 > 1e-4 && r.r3 > 1e-4;
}

double max_norm(const std::array<double, 2>& g) {
    return std::max(std::abs(g[0]), std::abs(g[1]));
}

}  // namespace

bool newton_from_seed(DomainPoint seed, double tol, int max_iters, DomainPoint& out,
                      int& iters_used) {
    DomainPoint p = seed;
    if (!workable(p)) return false;
    auto g = grad_F(p);
    double gn = max_norm(g);
    for (iters_used = 0; iters_used < max_iters; ++iters_used) {
        if (gn < tol) {
            out = p;
            return true;
        }
        const Hessian H = hessian_F(p);
        const double det = H.det();
        double dx, dy;
        if (std::abs(det) > 1e-14) {
            dx = -(H.yy * g[0] - H.xy * g[1]) / det;
            dy = -(-H.xy * g[0] + H.xx * g[1]) / det;
        } else {
            dx = -g[0];
            dy = -g[1];
        }
        // Halve the step until the gradient norm decreases.
        double lambda = 1.0;
        bool moved = false;
        for (int k = 0; k < 30; ++k, lambda *= 0.5) {
            const DomainPoint trial{p.x + lambda * dx, p.y + lambda * dy};
            if (!workable(trial)) continue;
            const auto gt = grad_F(trial);
            const double gtn = max_norm(gt);
            if (gtn < gn) {
                p = trial;
                g = gt;
                gn = gtn;
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }
    if (gn < tol) {
        out = p;
        return true;
    }
    return false;
}

CriticalPointSearch find_critical_points(int grid, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("find_critical_points: tol must be positive");
    if (grid < 2) throw std::invalid_argument("find_critical_points: grid too small");

    constexpr double kClip = 1e-3;
    constexpr double kDedup = 1e-6;

    CriticalPointSearch result;
    std::vector<DomainPoint> converged;
    for (int i = 0; i < grid; ++i) {
        for (int j = 0; j < grid; ++j) {
            const double x = 0.5 + 0.5 * (i + 0.5) / grid;
            const double y = (j + 0.5) / grid;
            // Clip seeds away from the three edges of M.
            if (!(1.0 - x >= kClip && x - y >= kClip && x + y - 1.0 >= kClip)) continue;
            ++result.seeds_total;
            DomainPoint root{};
            int iters = 0;
            if (!newton_from_seed({x, y}, tol, 200, root, iters)) {
                ++result.seeds_failed;
                continue;
            }
            // Stationary points of the smooth extension outside M (the
            // mirror image of M1 across the diagonal) are dropped.
            if (distance_to_domain(root) > kDedup) continue;
            converged.push_back(project_to_domain(root));
        }
    }

    std::sort(converged.begin(), converged.end(), [](const DomainPoint& a, const DomainPoint& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    std::vector<DomainPoint> reps;
    for (const auto& p : converged) {
        bool dup = false;
        for (const auto& r : reps)
            if (std::max(std::abs(p.x - r.x), std::abs(p.y - r.y)) <= kDedup) {
                dup = true;
                break;
            }
        if (!dup) reps.push_back(p);
    }

    for (const auto& p : reps) {
        CriticalPointReport rep;
        rep.point = p;
        rep.value = eval_F(p);
        rep.grad_norm = max_norm(grad_F(p));
        rep.hess = hessian_F(p);
        if (distance_to_boundary(p) <= kDedup) {
            rep.cls = Classification::BoundaryExtremum;
        } else {
            const double det = rep.hess.det();
            if (det > 1e-9 && rep.hess.xx < -1e-9)
                rep.cls = Classification::LocalMax;
            else if (det > 1e-9 && rep.hess.xx > 1e-9)
                rep.cls = Classification::LocalMin;
            else if (det < -1e-9)
                rep.cls = Classification::Saddle;
            else
                rep.cls = Classification::Unclassified;
        }
        result.points.push_back(rep);
    }
    return result;
}

double scaling_identity_gap(const Triangle& t) {
    std::array<double, 3> s{t.a, t.b, t.c};
    std::sort(s.begin(), s.end(), std::greater<>());
    const Triangle sorted(s[0], s[1], s[2]);
    const double f = eval_F({s[1] / s[0], s[2] / s[0]});
    return std::abs(median_residual(sorted) - 0.5 * s[0] * s[0] * f);
}

DomainPoint EdgeProfile::embed(double t) const {
    switch (edge) {
        case Edge::XEqualsOne: return {1.0, t};
        case Edge::Diagonal: return {t, t};
        case Edge::AntiDiagonal: return {t, 1.0 - t};
        case Edge::XEqualsZero: return {0.0, t};
    }
    return {0.0, 0.0};
}

double EdgeProfile::eval(double t) const { return eval_F(embed(t)); }

std::array<double, 2> EdgeProfile::maximize(int samples) const {
    if (vacuous) throw std::logic_error("EdgeProfile::maximize: edge is disjoint from M");
    double best_t = lo;
    double best_v = eval(lo);
    for (int i = 1; i <= samples; ++i) {
        const double t = lo + (hi - lo) * i / samples;
        const double v = eval(t);
        if (v > best_v) {
            best_v = v;
            best_t = t;
        }
    }
    return {best_t, best_v};
}

std::array<EdgeProfile, 4> boundary_profiles() {
    return {EdgeProfile{Edge::XEqualsOne, "x=1", 0.0, 1.0, false},
            EdgeProfile{Edge::Diagonal, "x=y", 0.5, 1.0, false},
            EdgeProfile{Edge::AntiDiagonal, "x+y=1", 0.5, 1.0, false},
            EdgeProfile{Edge::XEqualsZero, "x=0", 0.0, 1.0, true}};
}

}  // namespace triq

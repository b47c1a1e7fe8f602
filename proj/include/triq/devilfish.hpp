#pragma once

#include <array>
#include <string>
#include <vector>

#include "triq/triangle.hpp"

namespace triq {

// Normalized side ratios (x, y) = (b/a, c/a) for sides sorted a >= b >= c.
// The admissible region is M = { 0 <= y <= x <= 1, x + y >= 1 }.
struct DomainPoint {
    double x, y;
};

// Membership in M, with an absolute tolerance on each constraint.
bool in_domain(const DomainPoint& p, double tol = 0.0);

// Distance from p to the closest point of M (0 inside).
double distance_to_domain(const DomainPoint& p);
// Distance from p to the boundary of M.
double distance_to_boundary(const DomainPoint& p);
// Closest point of M to p.
DomainPoint project_to_domain(const DomainPoint& p);

// The devil-fish objective
//   F(x,y) = (1 - sqrt(xy)) sqrt(2x^2 + 2y^2 - 1)
//          + (x - sqrt(y))  sqrt(2 + 2y^2 - x^2)
//          + (y - sqrt(x))  sqrt(2 + 2x^2 - y^2).
// Radicands are clamped to 0 within -1e-12; below that a std::domain_error
// signals a point outside the natural domain.
double eval_F(const DomainPoint& p);

// Analytic gradient of F. Requires x, y > 0 and all radicands > 1e-12.
std::array<double, 2> grad_F(const DomainPoint& p);

struct Hessian {
    double xx, xy, yy;
    double det() const { return xx * yy - xy * xy; }
};

// Second partials by central finite differences of the analytic gradient.
Hessian hessian_F(const DomainPoint& p, double h = 1e-5);

enum class Classification { LocalMax, LocalMin, Saddle, BoundaryExtremum, Unclassified };

const char* classification_name(Classification c);

struct CriticalPointReport {
    DomainPoint point{};
    double value = 0.0;
    double grad_norm = 0.0;  // max-norm of the gradient at the point
    Hessian hess{};
    Classification cls = Classification::Unclassified;
};

struct CriticalPointSearch {
    std::vector<CriticalPointReport> points;
    int seeds_total = 0;
    int seeds_failed = 0;
};

// Damped Newton on grad F from a uniform interior grid of M (grid x grid
// seeds, clipped 1e-3 from the edges). Converged points are deduplicated at
// max-norm distance 1e-6 and classified via the Hessian; points that leave M
// toward the corner (1,1) are projected back and reported as
// boundary extrema.
CriticalPointSearch find_critical_points(int grid = 32, double tol = 1e-10);

// Runs Newton from a single seed; returns true on convergence.
bool newton_from_seed(DomainPoint seed, double tol, int max_iters, DomainPoint& out,
                      int& iters_used);

// |median_residual(t) - a^2/2 * F(b/a, c/a)| for sides sorted a >= b >= c.
double scaling_identity_gap(const Triangle& t);

enum class Edge { XEqualsOne, Diagonal, AntiDiagonal, XEqualsZero };

// Restriction of F to one edge of M, parameterized over [lo, hi].
// The paper-listed {x = 0} edge is disjoint from M (x >= 1/2 on M) and is
// exposed flagged vacuous.
struct EdgeProfile {
    Edge edge;
    std::string name;
    double lo, hi;
    bool vacuous;

    DomainPoint embed(double t) const;
    double eval(double t) const;
    // Dense-sampling maximum over [lo, hi]; returns {argmax, max}.
    std::array<double, 2> maximize(int samples = 100000) const;
};

std::array<EdgeProfile, 4> boundary_profiles();

}  // namespace triq

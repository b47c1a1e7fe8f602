#include "triq/triangle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace triq {

Triangle::Triangle(double a_, double b_, double c_, double eps) : a(a_), b(b_), c(c_) {
    if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c)))
        throw std::invalid_argument("triangle sides must be finite");
    if (!(a > 0.0 && b > 0.0 && c > 0.0))
        throw std::invalid_argument("triangle sides must be positive");
    if (!(eps >= 0.0))
        throw std::invalid_argument("strictness margin must be >= 0");
    if (!(a + b > c + eps && b + c > a + eps && a + c > b + eps))
        throw std::invalid_argument("triangle inequality violated");
}

double area(const Triangle& t) {
    const double p = 0.5 * (t.a + t.b + t.c);
    double rad = p * (p - t.a) * (p - t.b) * (p - t.c);
    if (rad < 0.0) {
        const double p4 = p * p * p * p;
        if (rad < -1e-12 * p4)
            throw std::domain_error("Heron radicand negative: not a triangle");
        rad = 0.0;
    }
    return std::sqrt(rad);
}

std::array<double, 3> altitudes(const Triangle& t) {
    const double two_s = 2.0 * area(t);
    return {two_s / t.a, two_s / t.b, two_s / t.c};
}

namespace {

double median_of(double x, double y, double z) {
    const double rad = 2.0 * y * y + 2.0 * z * z - x * x;
    if (rad <= 0.0)
        throw std::domain_error("median radicand nonpositive: corrupted input");
    return 0.5 * std::sqrt(rad);
}

}  // namespace

std::array<double, 3> medians(const Triangle& t) {
    return {median_of(t.a, t.b, t.c), median_of(t.b, t.c, t.a), median_of(t.c, t.a, t.b)};
}

TriangleDerived derive(const Triangle& t) {
    TriangleDerived d{};
    d.area = area(t);
    const auto h = altitudes(t);
    const auto m = medians(t);
    d.h_a = h[0];
    d.h_b = h[1];
    d.h_c = h[2];
    d.m_a = m[0];
    d.m_b = m[1];
    d.m_c = m[2];
    d.p = 0.5 * (t.a + t.b + t.c);
    return d;
}

double altitude_residual(const Triangle& t) {
    const auto h = altitudes(t);
    const double lhs = t.a * h[0] + t.b * h[1] + t.c * h[2];
    const double rhs = std::sqrt(t.b * t.c) * h[0] + std::sqrt(t.a * t.c) * h[1] +
                       std::sqrt(t.a * t.b) * h[2];
    return lhs - rhs;
}

double median_residual(const Triangle& t) {
    const auto m = medians(t);
    return (t.a - std::sqrt(t.b * t.c)) * m[0] + (t.b - std::sqrt(t.a * t.c)) * m[1] +
           (t.c - std::sqrt(t.a * t.b)) * m[2];
}

double corollary_a_residual(const Triangle& t) {
    const auto m = medians(t);
    const double two_p = t.a + t.b + t.c;
    return (two_p - 3.0 * t.a) * m[0] + (two_p - 3.0 * t.b) * m[1] + (two_p - 3.0 * t.c) * m[2];
}

MedianRatioCheck corollary_b_check(const Triangle& t) {
    std::array<double, 3> s{t.a, t.b, t.c};
    std::sort(s.begin(), s.end(), std::greater<>());
    const Triangle sorted(s[0], s[1], s[2]);
    const auto m = medians(sorted);
    MedianRatioCheck r{};
    r.ratio = m[0] / m[2];
    r.bound = (std::sqrt(s[0] * s[1]) + std::sqrt(s[0] * s[2]) + std::sqrt(s[1] * s[2])) /
              (s[0] + s[1] + s[2]);
    r.ok = r.ratio <= r.bound + 1e-12 && r.bound <= 1.0 + 1e-12;
    return r;
}

}  // namespace triq

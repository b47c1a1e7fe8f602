#pragma once

#include <array>

namespace triq {

// A valid triangle: positive sides, strict triangle inequalities with an
// optional strictness margin eps (absolute). Throws std::invalid_argument
// on violation.
struct Triangle {
    double a, b, c;

    Triangle(double a_, double b_, double c_, double eps = 0.0);
};

// Quantities derived from the sides. Units: area is squared-length,
// everything else is length.
struct TriangleDerived {
    double area;
    double h_a, h_b, h_c;
    double m_a, m_b, m_c;
    double p;  // semiperimeter
};

// Heron's formula. The radicand is clamped to 0 when it rounds slightly
// negative (within -1e-12 * p^4); beyond that a std::domain_error signals a
// non-triangle slipping past validation.
double area(const Triangle& t);

// h_x = 2S / x for each side x.
std::array<double, 3> altitudes(const Triangle& t);

// m_a = sqrt(2b^2 + 2c^2 - a^2) / 2, cyclically.
std::array<double, 3> medians(const Triangle& t);

TriangleDerived derive(const Triangle& t);

// (a h_a + b h_b + c h_c) - (sqrt(bc) h_a + sqrt(ac) h_b + sqrt(ab) h_c).
// The theorem asserts this is <= 0 for every triangle.
double altitude_residual(const Triangle& t);

// (a - sqrt(bc)) m_a + (b - sqrt(ac)) m_b + (c - sqrt(ab)) m_c, <= 0.
double median_residual(const Triangle& t);

// (2p - 3a) m_a + (2p - 3b) m_b + (2p - 3c) m_c, >= 0.
double corollary_a_residual(const Triangle& t);

struct MedianRatioCheck {
    double ratio;  // m_a / m_c for sides sorted a >= b >= c
    double bound;  // (sqrt(ab) + sqrt(ac) + sqrt(bc)) / (a + b + c)
    bool ok;       // ratio <= bound <= 1 within 1e-12
};

// Sides are sorted descending internally.
MedianRatioCheck corollary_b_check(const Triangle& t);

}  // namespace triq

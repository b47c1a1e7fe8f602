#pragma once

#include <span>

#include "triq/triangle.hpp"

namespace triq {

// Images of the substitution x = sqrt(bc), y = sqrt(ac), z = sqrt(ab).
struct SubstitutionTriple {
    double x, y, z;
};

// Arithmetic mean minus geometric mean, >= 0 for nonnegative inputs.
// Geometric mean is computed in the log domain when all inputs are positive.
double amgm_gap(std::span<const double> values);

// a^3 + b^3 + c^3 - 3abc, >= 0 whenever a + b + c > 0.
double lemma2_gap(double a, double b, double c);

// The substitution dispatching the altitude inequality: the returned triple
// satisfies altitude_residual(t) == -2S * lemma2_gap(x,y,z) / (abc).
SubstitutionTriple reduce_inequality1(const Triangle& t);

struct IsoscelesMargin {
    double lhs;  // (a - sqrt(ac)) sqrt(a^2 + 2c^2)
    double rhs;  // (a - c)/2 * sqrt(4a^2 - c^2)
};

// Both sides of the isosceles-case inequality for a = b > c > 0; lhs <= rhs.
IsoscelesMargin isosceles_margin(double a, double c);

// p(t) = t^5 + 14t^4 + 73t^3 - 40t^2 + 16t - 64.
double quintic_eval(double t);

// Expands (t - 1)(t^4 + 15t^3 + 88t^2 + 48t + 64) by exact integer
// convolution and compares against the quintic's coefficients; also spot
// checks that the quartic factor is positive for sampled t > 0.
bool quintic_factor_check();

// Sign monitor for the squaring step of the isosceles chain:
// (c^3 + 9ac^2 - 4a^2c) / (4a^2 - c^2). When this is negative, squaring it
// was one-directional (the pre-squared inequality then holds trivially).
double presquare_quantity(double a, double c);

}  // namespace triq

#include "triq/reductions.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace triq {

double amgm_gap(std::span<const double> values) {
    if (values.empty())
        throw std::invalid_argument("amgm_gap: need at least one value");
    double sum = 0.0;
    double log_sum = 0.0;
    bool has_zero = false;
    for (double v : values) {
        if (v < 0.0)
            throw std::domain_error("amgm_gap: negative input");
        sum += v;
        if (v == 0.0)
            has_zero = true;
        else
            log_sum += std::log(v);
    }
    const double n = static_cast<double>(values.size());
    const double gm = has_zero ? 0.0 : std::exp(log_sum / n);
    return sum / n - gm;
}

double lemma2_gap(double a, double b, double c) {
    if (!(a + b + c > 0.0))
        throw std::invalid_argument("lemma2_gap: requires a + b + c > 0");
    return a * a * a + b * b * b + c * c * c - 3.0 * a * b * c;
}

SubstitutionTriple reduce_inequality1(const Triangle& t) {
    return {std::sqrt(t.b * t.c), std::sqrt(t.a * t.c), std::sqrt(t.a * t.b)};
}

IsoscelesMargin isosceles_margin(double a, double c) {
    if (!(a > c && c > 0.0))
        throw std::invalid_argument("isosceles_margin: requires a > c > 0");
    IsoscelesMargin m{};
    m.lhs = (a - std::sqrt(a * c)) * std::sqrt(a * a + 2.0 * c * c);
    m.rhs = 0.5 * (a - c) * std::sqrt(4.0 * a * a - c * c);
    return m;
}

double quintic_eval(double t) {
    return ((((t + 14.0) * t + 73.0) * t - 40.0) * t + 16.0) * t - 64.0;
}

bool quintic_factor_check() {
    // (t - 1)(t^4 + 15t^3 + 88t^2 + 48t + 64), exact integer convolution.
    const std::int64_t quartic[5] = {1, 15, 88, 48, 64};  // degree 4 .. 0
    const std::int64_t linear[2] = {1, -1};
    std::int64_t product[6] = {0, 0, 0, 0, 0, 0};
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 2; ++j) product[i + j] += quartic[i] * linear[j];

    const std::int64_t quintic[6] = {1, 14, 73, -40, 16, -64};
    for (int i = 0; i < 6; ++i)
        if (product[i] != quintic[i]) return false;

    // The quartic factor is claimed positive for t > 0.
    for (double t : {1e-6, 0.25, 0.5, 1.0, 2.0, 10.0, 1e3}) {
        const double q = (((t + 15.0) * t + 88.0) * t + 48.0) * t + 64.0;
        if (!(q > 0.0)) return false;
    }
    return true;
}

double presquare_quantity(double a, double c) {
    return (c * c * c + 9.0 * a * c * c - 4.0 * a * a * c) / (4.0 * a * a - c * c);
}

}  // namespace triq

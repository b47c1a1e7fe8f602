#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace triq {

// Closed interval with outward-safe endpoints. Every arithmetic result is
// widened by one ulp per endpoint, so enclosures survive rounding without
// directed-rounding mode switches.
struct Interval {
    double lo, hi;

    static Interval point(double v) { return {v, v}; }
    static Interval make(double lo, double hi) {
        if (!(lo <= hi)) throw std::invalid_argument("Interval: lo > hi");
        return {lo, hi};
    }

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    bool contains(double v) const { return lo <= v && v <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
};

inline Interval widen(Interval a) {
    return {std::nextafter(a.lo, -INFINITY), std::nextafter(a.hi, INFINITY)};
}

inline Interval operator+(Interval a, Interval b) { return widen({a.lo + b.lo, a.hi + b.hi}); }
inline Interval operator-(Interval a, Interval b) { return widen({a.lo - b.hi, a.hi - b.lo}); }
inline Interval operator-(Interval a) { return {-a.hi, -a.lo}; }

inline Interval operator*(Interval a, Interval b) {
    const double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return widen({std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})});
}

inline Interval operator*(double s, Interval a) { return Interval::point(s) * a; }
inline Interval operator+(double s, Interval a) { return Interval::point(s) + a; }
inline Interval operator-(double s, Interval a) { return Interval::point(s) - a; }
inline Interval operator-(Interval a, double s) { return a - Interval::point(s); }

inline Interval sqr(Interval a) {
    const double m = std::max(std::abs(a.lo), std::abs(a.hi));
    const double lo = a.contains(0.0) ? 0.0 : std::min(a.lo * a.lo, a.hi * a.hi);
    Interval r = widen({lo, m * m});
    r.lo = std::max(r.lo, 0.0);  // a square is never negative
    return r;
}

// Denominator must not contain 0.
inline Interval operator/(Interval a, Interval b) {
    if (b.contains(0.0)) throw std::domain_error("Interval division by interval containing 0");
    const double q1 = a.lo / b.lo, q2 = a.lo / b.hi, q3 = a.hi / b.lo, q4 = a.hi / b.hi;
    return widen({std::min({q1, q2, q3, q4}), std::max({q1, q2, q3, q4})});
}

// Monotonic square root; requires lo >= 0 (callers clamp first).
inline Interval sqrt_i(Interval a) {
    if (a.lo < 0.0) throw std::domain_error("sqrt_i: negative lower bound");
    Interval r = widen({std::sqrt(a.lo), std::sqrt(a.hi)});
    r.lo = std::max(r.lo, 0.0);
    return r;
}

inline Interval intersect(Interval a, Interval b) {
    const double lo = std::max(a.lo, b.lo);
    const double hi = std::min(a.hi, b.hi);
    if (!(lo <= hi)) throw std::domain_error("intersect: empty intersection");
    return {lo, hi};
}

inline Interval hull(Interval a, Interval b) {
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

// Axis-aligned box in the (x, y) ratio plane.
struct Box {
    Interval x, y;

    double width() const { return std::max(x.width(), y.width()); }
};

}  // namespace triq

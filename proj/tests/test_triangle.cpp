#include <cmath>

#include <doctest.h>

#include "triq/fuzz.hpp"
#include "triq/triangle.hpp"

using namespace triq;

TEST_SUITE_BEGIN("triangle");

TEST_CASE("constructor rejects non-triangles") {
    CHECK_THROWS_AS(Triangle(1, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(Triangle(1, 1, 2), std::invalid_argument);  // degenerate
    CHECK_THROWS_AS(Triangle(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(Triangle(-1, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(Triangle(std::nan(""), 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(Triangle(INFINITY, 1, 1), std::invalid_argument);
    CHECK_NOTHROW(Triangle(3, 4, 5));
    CHECK_NOTHROW(Triangle(1e-150, 1e-150, 1e-150));
}

TEST_CASE("eps enforces a strictness margin") {
    // 3 + 4 - 5 = 2
    CHECK_NOTHROW(Triangle(3, 4, 5, 1.0));
    CHECK_THROWS_AS(Triangle(3, 4, 5, 2.5), std::invalid_argument);
}

TEST_CASE("3-4-5 derived quantities") {
    const Triangle t(3, 4, 5);
    CHECK(area(t) == doctest::Approx(6.0).epsilon(1e-14));
    const auto h = altitudes(t);
    CHECK(h[0] == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(h[1] == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(h[2] == doctest::Approx(2.4).epsilon(1e-14));
    const auto m = medians(t);
    CHECK(m[0] == doctest::Approx(4.2720018726587655839).epsilon(1e-14));
    CHECK(m[1] == doctest::Approx(std::sqrt(13.0)).epsilon(1e-14));
    CHECK(m[2] == doctest::Approx(2.5).epsilon(1e-14));
}

TEST_CASE("3-4-5 residuals match high-precision references") {
    const Triangle t(3, 4, 5);
    CHECK(altitude_residual(t) == doctest::Approx(-1.8213377349511788).epsilon(1e-13));
    CHECK(median_residual(t) == doctest::Approx(-1.9912565363238739).epsilon(1e-13));
    CHECK(corollary_a_residual(t) == doctest::Approx(5.3160056179762968).epsilon(1e-13));
}

TEST_CASE("equilateral triangle is the equality case") {
    const Triangle t(2, 2, 2);
    CHECK(std::abs(altitude_residual(t)) <= 1e-14);
    CHECK(std::abs(median_residual(t)) <= 1e-14);
    CHECK(std::abs(corollary_a_residual(t)) <= 1e-14);
}

TEST_CASE("corollary b on 5-4-3") {
    const auto r = corollary_b_check(Triangle(5, 4, 3));
    CHECK(r.ratio == doctest::Approx(0.58520573598065282).epsilon(1e-13));
    CHECK(r.bound == doctest::Approx(0.98410174302872924).epsilon(1e-13));
    CHECK(r.ok);
}

TEST_CASE("residuals are permutation invariant") {
    const double sides[3] = {3.2, 4.7, 5.1};
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    const Triangle base(sides[0], sides[1], sides[2]);
    for (const auto& p : perms) {
        const Triangle t(sides[p[0]], sides[p[1]], sides[p[2]]);
        CHECK(altitude_residual(t) ==
              doctest::Approx(altitude_residual(base)).epsilon(1e-12));
        CHECK(median_residual(t) == doctest::Approx(median_residual(base)).epsilon(1e-12));
        CHECK(corollary_a_residual(t) ==
              doctest::Approx(corollary_a_residual(base)).epsilon(1e-12));
    }
}

TEST_CASE("residuals scale as lambda^2") {
    SplitMix64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const double a = 1 + rng.next_unit(), b = 1 + rng.next_unit();
        const double c = std::max(a, b) + rng.next_unit() * (a + b - std::max(a, b) - 1e-9) * 0.99;
        const double lam = 0.01 + 100 * rng.next_unit();
        const Triangle t(a, b, c), ts(lam * a, lam * b, lam * c);
        const double l2 = lam * lam;
        CHECK(median_residual(ts) ==
              doctest::Approx(l2 * median_residual(t)).epsilon(1e-10));
        CHECK(altitude_residual(ts) ==
              doctest::Approx(l2 * altitude_residual(t)).epsilon(1e-10));
    }
}

TEST_SUITE_END();

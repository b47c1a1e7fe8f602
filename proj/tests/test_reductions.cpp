#include <cmath>
#include <vector>

#include <doctest.h>

#include "triq/fuzz.hpp"
#include "triq/reductions.hpp"

using namespace triq;

TEST_SUITE_BEGIN("reductions");

TEST_CASE("amgm_gap basics") {
    const double one[] = {4.0};
    CHECK(amgm_gap(one) == doctest::Approx(0.0).epsilon(1e-15));
    const double two[] = {1.0, 4.0};
    CHECK(amgm_gap(two) == doctest::Approx(0.5).epsilon(1e-13));
    const double eq[] = {3.0, 3.0, 3.0};
    CHECK(std::abs(amgm_gap(eq)) <= 1e-13);
}

TEST_CASE("amgm_gap is nonnegative on random inputs") {
    SplitMix64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        std::vector<double> v(2 + rng.next() % 5);
        for (auto& x : v) x = rng.next_unit() * 100;
        CHECK(amgm_gap(v) >= -1e-12 * 100);
    }
}

TEST_CASE("lemma2_gap values and nonnegativity") {
    CHECK(lemma2_gap(1, 1, 1) == doctest::Approx(0.0));
    CHECK(lemma2_gap(1, 2, 3) == doctest::Approx(18.0).epsilon(1e-14));
    SplitMix64 rng(12);
    for (int i = 0; i < 1000; ++i) {
        const double a = rng.next_unit() * 10, b = rng.next_unit() * 10, c = rng.next_unit() * 10;
        CHECK(lemma2_gap(a, b, c) >= -1e-10);
    }
}

TEST_CASE("reduce_inequality1 carries the altitude residual to lemma 2") {
    FuzzConfig cfg;
    cfg.count = 500;
    cfg.seed = 13;
    TriangleStream stream(cfg);
    for (int i = 0; i < 500; ++i) {
        const Triangle t = stream.next();
        const auto s = reduce_inequality1(t);
        CHECK(s.x == doctest::Approx(std::sqrt(t.b * t.c)).epsilon(1e-14));
        const double via = -2.0 * area(t) * lemma2_gap(s.x, s.y, s.z) / (t.a * t.b * t.c);
        const double scale = t.a * t.a + t.b * t.b + t.c * t.c;
        CHECK(altitude_residual(t) == doctest::Approx(via).scale(scale).epsilon(1e-10));
    }
}

TEST_CASE("isosceles margin holds for a > c > 0") {
    SplitMix64 rng(14);
    for (int i = 0; i < 1000; ++i) {
        const double a = 0.1 + rng.next_unit() * 10;
        const double c = a * rng.next_unit();
        if (c <= 0 || c >= a) continue;
        const auto m = isosceles_margin(a, c);
        CHECK(m.lhs <= m.rhs + 1e-12 * a * a);
    }
    // both sides vanish as c -> a (the equilateral limit)
    const auto eq = isosceles_margin(2.0, 2.0 - 1e-9);
    CHECK(eq.lhs == doctest::Approx(0.0).epsilon(1e-8));
    CHECK(eq.rhs == doctest::Approx(0.0).epsilon(1e-8));
    CHECK_THROWS_AS(isosceles_margin(1.0, 2.0), std::invalid_argument);
}

TEST_CASE("quintic evaluation and exact factorization") {
    CHECK(quintic_eval(1.0) == doctest::Approx(0.0));
    CHECK(quintic_eval(2.0) == doctest::Approx(648.0));
    CHECK(quintic_eval(0.0) == doctest::Approx(-64.0));
    CHECK(quintic_factor_check());
}

TEST_CASE("quintic has no root other than t=1 for t > 0") {
    for (double t = 0.01; t <= 10.0; t += 0.01) {
        if (std::abs(t - 1.0) < 0.005) continue;
        CHECK(quintic_eval(t) != doctest::Approx(0.0).epsilon(0.0));
        CHECK(((t < 1.0) == (quintic_eval(t) < 0.0)));
    }
}

TEST_CASE("presquare quantity changes sign across the strip") {
    CHECK(presquare_quantity(1.0, 0.1) < 0.0);
    CHECK(presquare_quantity(1.0, 0.9) > 0.0);
}

TEST_SUITE_END();

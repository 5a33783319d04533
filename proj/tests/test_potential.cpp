#include <doctest.h>

#include <cmath>

#include "hgm/error.hpp"
#include "hgm/potential.hpp"

using namespace hgm;

TEST_CASE("q = e^{alpha re} - 1")
{
    // 50-digit reference values
    CHECK(q_of(0.025, 1.1198) == doctest::Approx(0.028390542455857863).epsilon(1e-15));
    CHECK(q_of(0.025, 1.2746) == doctest::Approx(0.032378124850294613).epsilon(1e-15));
    CHECK(q_of(1e-12, 1.0) == doctest::Approx(1e-12).epsilon(1e-12));
}

TEST_CASE("exact potential has its minimum De-shifted at re when a = b = 0")
{
    const auto p = make_potential(0.0, 0.0, 4.0, 1.2, 0.5);
    CHECK(potential_exact(p, 1.2) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(potential_exact(p, 1.1) > 0.0);
    CHECK(potential_exact(p, 1.3) > 0.0);
    CHECK(potential_exact(p, 200.0) == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("approximation replaces 1/r by alpha/(1 - e^{-alpha r})")
{
    const auto p = make_potential(1.5, 0.7, 3.0, 1.1, 0.3);
    const double r = 0.8;
    const double inv = 0.3 / (1.0 - std::exp(-0.3 * r));
    const double morse = potential_exact(make_potential(0.0, 0.0, 3.0, 1.1, 0.3), r);
    CHECK(potential_approx(p, r)
          == doctest::Approx(-1.5 * inv + 0.7 * std::exp(-0.3 * r) * inv + morse).epsilon(1e-14));
    CHECK(potential_approx_asymptote(p) == doctest::Approx(3.0 - 1.5 * 0.3));
    CHECK(centrifugal_approx(0.3, r, 2.0) == doctest::Approx(2.0 * inv * inv));
}

TEST_CASE("small alpha r makes the approximation converge to the exact form")
{
    const auto p = make_potential(1.0, 1.0, 3.0, 1.1, 1e-3);
    CHECK(std::abs(potential_approx(p, 1.0) - potential_exact(p, 1.0)) < 1e-3);
}

TEST_CASE("curve sampling includes both endpoints")
{
    const auto p = make_potential(0.0, 0.0, 3.0, 1.1, 0.025);
    const auto c = potential_curve(p, 0.5, 10.0, 3);
    REQUIRE(c.size() == 3);
    CHECK(c.front().r == 0.5);
    CHECK(c[1].r == doctest::Approx(5.25));
    CHECK(c.back().r == 10.0);
}

TEST_CASE("invalid potential parameters")
{
    CHECK_THROWS_AS(make_potential(0, 0, 1, 1, 0.0), InvalidParameter);
    CHECK_THROWS_AS(make_potential(0, 0, 1, -1, 0.1), InvalidParameter);
    CHECK_THROWS_AS(make_potential(0, 0, -1, 1, 0.1), InvalidParameter);
    const auto p = make_potential(0, 0, 1, 1, 0.1);
    CHECK_THROWS_AS(potential_exact(p, 0.0), InvalidParameter);
    CHECK_THROWS_AS(potential_curve(p, 1.0, 0.5, 10), InvalidParameter);
}

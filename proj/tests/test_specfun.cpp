#include <doctest.h>

#include <cmath>

#include "hgm/error.hpp"
#include "hgm/specfun.hpp"

using namespace hgm;

TEST_CASE("gamma and rising factorial")
{
    CHECK(ln_gamma(7.25) == doctest::Approx(7.0521854507385394).epsilon(1e-14));
    CHECK(ln_gamma(1.0) == doctest::Approx(0.0));
    CHECK(pochhammer(2.5, 4) == doctest::Approx(216.5625).epsilon(1e-15));
    CHECK(pochhammer(3.7, 0) == 1.0);
    CHECK_THROWS_AS(ln_gamma(0.0), InvalidParameter);
}

TEST_CASE("terminating hypergeometric series")
{
    CHECK(hyp2f1_terminating(3, 2.5, 1.5, 0.3) == doctest::Approx(0.049).epsilon(1e-14));
    CHECK(hyp2f1_terminating(0, 9.0, 2.0, 0.7) == 1.0);
    // 2F1(-n, B; B; s) = (1 - s)^n
    CHECK(hyp2f1_terminating(5, 2.2, 2.2, 0.4) == doctest::Approx(std::pow(0.6, 5)).epsilon(1e-14));
}

TEST_CASE("Jacobi polynomials")
{
    CHECK(jacobi_poly({1.37, 0.42, 4}, -0.3) == doctest::Approx(0.32292377720614844).epsilon(1e-14));
    CHECK(jacobi_poly({2.0, 3.0, 0}, 0.5) == 1.0);
    // P_1^{(a,b)}(x) = (a + 1) + (a + b + 2)(x - 1)/2
    CHECK(jacobi_poly({0.5, 1.5, 1}, 0.2) == doctest::Approx(1.5 + 4.0 * (-0.4)).epsilon(1e-15));
    // Legendre limit
    CHECK(jacobi_poly({0.0, 0.0, 2}, 0.3) == doctest::Approx(0.5 * (3 * 0.09 - 1)).epsilon(1e-15));
}

TEST_CASE("Jacobi norm integral")
{
    CHECK(jacobi_norm_integral(1.8, 0.6, 2) == doctest::Approx(0.20090131772343582).epsilon(1e-14));
    CHECK(jacobi_norm_integral(1.0, 1.0, 0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK_THROWS_AS(jacobi_norm_integral(-1.0, 0.5, 1), InvalidParameter);
    CHECK_THROWS_AS(jacobi_norm_integral(0.5, 0.5, -1), InvalidParameter);
}

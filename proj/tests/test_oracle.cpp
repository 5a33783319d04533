#include <doctest.h>

#include <cmath>

#include "hgm/error.hpp"
#include "hgm/molecules.hpp"
#include "hgm/oracle.hpp"
#include "hgm/spectra_nonrel.hpp"

using namespace hgm;

TEST_CASE("finite differences reproduce the box spectrum")
{
    const auto g = RadialGrid::make(1.0, 3.0, 2001);
    const auto ex = fd_extrapolated([](double) { return 0.0; }, 0.5, g, 3);
    REQUIRE(ex.size() == 3);
    for (int m = 1; m <= 3; ++m) {
        const double exact = 0.5 * std::pow(m * M_PI / 2.0, 2);
        CHECK(ex[m - 1].value == doctest::Approx(exact).epsilon(1e-9));
        CHECK(ex[m - 1].fine < exact); // second-order FD converges from below here
    }
}

TEST_CASE("eigenvectors have the expected node count")
{
    const auto g = RadialGrid::make(0.0 + 1e-3, 1.0, 1001);
    const auto e = fd_radial_eigen([](double) { return 0.0; }, 1.0, g, 4);
    for (int k = 0; k < 4; ++k)
        CHECK(count_sign_changes(fd_radial_eigenvector([](double) { return 0.0; }, 1.0, g, e[k])) == k);
}

TEST_CASE("Richardson extrapolation")
{
    const auto r = richardson_extrapolate(1.0 - 4e-2, 1.0 - 1e-2, 2.0, 2);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r.error_estimate == doctest::Approx(3e-2));
}

TEST_CASE("Schroedinger oracle agrees with the closed form")
{
    const auto [p, part] = to_potential_params(builtin_molecules()[4], 1.0, 1.0, 0.025);
    const auto ex = schrodinger_oracle(p, part, 1, 3);
    for (int n = 0; n < 3; ++n)
        CHECK(std::abs(ex[n].value - energy_nonrel(p, part, n, 1)) < 1e-9);
}

TEST_CASE("shooting locates the closed-form level")
{
    const auto [p, part] = to_potential_params(builtin_molecules()[0], 0.0, 0.0, 0.025);
    const double E = energy_nonrel(p, part, 1, 2);
    const auto ode = nonrel_equation(p, part, 2);
    const auto shot = shooting_eigenvalue(ode, E, 1e-6, p.alpha);
    REQUIRE(shot);
    CHECK(std::abs(*shot - E) < 1e-9);
    CHECK_FALSE(shooting_brackets(ode, E + 0.05, 1e-6, p.alpha));
}

TEST_CASE("grid validation")
{
    CHECK_THROWS_AS(RadialGrid::make(0.0, 1.0, 1000), InvalidParameter);
    CHECK_THROWS_AS(RadialGrid::make(1.0, 0.5, 1000), InvalidParameter);
    CHECK_THROWS_AS(RadialGrid::make(0.1, 1.0, 50), GridTooCoarse);
    const auto g = RadialGrid::make(0.1, 1.0, 200);
    CHECK_THROWS_AS(fd_radial_eigen([](double) { return 0.0; }, 1.0, g, 100), GridTooCoarse);
}

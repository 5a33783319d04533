#include <doctest.h>

#include <cmath>

#include "hgm/error.hpp"
#include "hgm/molecules.hpp"
#include "hgm/oracle.hpp"
#include "hgm/spectra_nonrel.hpp"
#include "hgm/spectra_rel.hpp"

using namespace hgm;

namespace {

PotentialParams ch(double a, double b)
{
    return to_potential_params(builtin_molecules().front(), a, b, 0.025).first;
}

} // namespace

TEST_CASE("Klein-Gordon reduced coefficients")
{
    // CH at a = b = 0, M = 10, E = 5, l = 0, hbar c = 1 (50-digit values)
    const RelSystem sys{ch(0, 0), 10.0, 1.0};
    const auto k = kg_ansatz(sys, 5.0, {0, 0, -1, 3});
    CHECK(k.eps == doctest::Approx(214738.05185748173).epsilon(1e-13));
    CHECK(k.chi == doctest::Approx(5379.3293668901977).epsilon(1e-13));
    CHECK(k.kg_phi == doctest::Approx(76.361039387369578).epsilon(1e-13));
    CHECK(k.beta == 0.0);
    CHECK(k.Lambda == 0.0);
    CHECK(lambda_D(3, 2) == 6.0);
    CHECK(lambda_D(2, 0) == doctest::Approx(-0.25));
}

TEST_CASE("Klein-Gordon roots satisfy both residual forms")
{
    const RelSystem sys{ch(1, 1), 500.0, 1.0};
    for (int n = 0; n <= 2; ++n) {
        const auto lv = solve_kg_energy(sys, {n, 1, -1, 3});
        REQUIRE(lv.size() == 1);
        CHECK(std::abs(lv[0].residual) < 1e-10);
        CHECK(std::abs(lv[0].cross_check_residual) < 1e-10);
        CHECK(lv[0].energy > sys.mass);
    }
}

TEST_CASE("Klein-Gordon reduces to the Schroedinger levels for a heavy particle")
{
    const auto [p, part] =
        to_potential_params(builtin_molecules().front(), 0.0, 0.0, 0.025);
    const RelSystem sys{p, part.mu_energy, part.hbar_c};
    for (int n = 0; n <= 2; ++n) {
        const auto lv = solve_kg_energy(sys, {n, 0, -1, 3});
        REQUIRE(lv.size() == 1);
        // E - M carries the rounding of E ~ 1e9 eV
        CHECK(lv[0].energy - sys.mass == doctest::Approx(energy_nonrel(p, part, n, 0)).epsilon(1e-5));
    }
}

TEST_CASE("spin symmetry with C_s = 0 matches Klein-Gordon")
{
    const RelSystem sys{ch(0, 0), 50.0, 1.0};
    for (int l = 0; l <= 2; ++l) {
        const auto kg = solve_kg_energy(sys, {1, l, -1, 3});
        const auto sp = solve_dirac_spin(sys, -(l + 1), 0.0, 1);
        REQUIRE(kg.size() == 1);
        REQUIRE(sp.size() == 1);
        CHECK(sp[0].energy == doctest::Approx(kg[0].energy).epsilon(1e-13));
    }
}

TEST_CASE("spin doublets are degenerate")
{
    const RelSystem sys{ch(1, 1), 500.0, 1.0};
    const auto lo = solve_dirac_spin(sys, -2, 0.5 * 500.0, 0);
    const auto hi = solve_dirac_spin(sys, 1, 0.5 * 500.0, 0);
    REQUIRE(lo.size() == 1);
    REQUIRE(hi.size() == 1);
    CHECK(lo[0].energy == hi[0].energy);
}

TEST_CASE("pseudospin levels are negative, degenerate and confirmed by shooting")
{
    const double M = 50.0;
    const double cps = -2.0 * M + 5.0;
    const RelSystem sys{ch(0, 20), M, 1.0};
    const auto a = solve_dirac_pseudospin(sys, -1, cps, 0);
    const auto b = solve_dirac_pseudospin(sys, 2, cps, 0);
    REQUIRE(a.size() == 1);
    REQUIRE(b.size() == 1);
    CHECK(a[0].energy < 0.0);
    CHECK(a[0].energy == b[0].energy);
    CHECK(std::abs(a[0].residual) < 1e-10);
    const auto ode = pseudospin_equation(sys.potential, M, -1, cps, 1.0);
    const auto shot = shooting_eigenvalue(ode, a[0].energy, 1e-8 * M, sys.potential.alpha);
    REQUIRE(shot);
    CHECK(*shot == doctest::Approx(a[0].energy).epsilon(1e-10));
}

TEST_CASE("relativistic wavefunctions")
{
    const RelSystem sys{ch(0, 0), 50.0, 1.0};
    const auto lv = solve_dirac_spin(sys, -1, 0.0, 2);
    const auto w = spin_wavefunction(sys, lv[0].energy, -1, 0.0, 2);
    CHECK(count_nodes(w) == 2);
    CHECK(std::isfinite(upper_spinor(sys, lv[0].energy, -1, 0.0, 2, 1.1)));
}

TEST_CASE("relativistic errors")
{
    const RelSystem sys{ch(0, 0), 50.0, 1.0};
    CHECK_THROWS_AS(solve_dirac_spin(sys, 0, 0.0, 0), InvalidParameter);
    CHECK_THROWS_AS(lambda_D(0, 0), InvalidParameter);
    SolveOptions narrow;
    narrow.lo = 50.0;
    narrow.hi = 50.0 + 1e-6;
    CHECK_THROWS_AS(solve_kg_energy(sys, {0, 0, -1, 3}, narrow), NoBoundState);
}

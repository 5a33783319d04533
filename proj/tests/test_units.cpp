#include <doctest.h>

#include "hgm/error.hpp"
#include "hgm/units.hpp"

using namespace hgm;

TEST_CASE("wavenumber and mass conversions")
{
    CHECK(cm_inverse_to_ev(8065.54) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(amu_to_mass_energy(1.0) == doctest::Approx(931.49410242e6).epsilon(1e-15));
    CHECK(hbar2_over_2mu(0.5e6) == doctest::Approx(1973.29 * 1973.29 / 1e6).epsilon(1e-15));
}

TEST_CASE("custom constants are honoured")
{
    UnitConstants u;
    u.cm_inv_to_ev = 2.0;
    CHECK(cm_inverse_to_ev(3.0, u) == 6.0);
}

TEST_CASE("non-positive inputs are rejected")
{
    CHECK_THROWS_AS(amu_to_mass_energy(0.0), InvalidParameter);
    CHECK_THROWS_AS(amu_to_mass_energy(-1.0), InvalidParameter);
    UnitConstants u;
    u.hbar_c = 0.0;
    CHECK_THROWS_AS(u.validate(), InvalidParameter);
}

#include "hgm/units.hpp"

#include <cmath>
#include <string>

#include "hgm/error.hpp"

namespace hgm {

void UnitConstants::validate() const
{
    auto check = [](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw InvalidParameter(std::string(name) + " must be positive and finite");
    };
    check(hbar_c, "hbar_c");
    check(cm_inv_to_ev, "cm_inv_to_ev");
    check(amu_to_ev, "amu_to_ev");
}

double cm_inverse_to_ev(double wavenumber, const UnitConstants& u)
{
    return wavenumber * u.cm_inv_to_ev;
}

double amu_to_mass_energy(double mass_amu, const UnitConstants& u)
{
    if (!(mass_amu > 0.0))
        throw InvalidParameter("mass must be positive, got " + std::to_string(mass_amu));
    return mass_amu * u.amu_to_ev;
}

double hbar2_over_2mu(double mu_energy, const UnitConstants& u)
{
    if (!(mu_energy > 0.0))
        throw InvalidParameter("mass-energy must be positive");
    return u.hbar_c * u.hbar_c / (2.0 * mu_energy);
}

} // namespace hgm

#pragma once

namespace hgm {

/// Conversion constants between the spectroscopic input units (cm^-1, amu)
/// and the eV / Angstrom system used for all internal computation.
struct UnitConstants
{
    double hbar_c = 1973.29;              ///< eV * Angstrom
    double cm_inv_to_ev = 1.239841984e-4; ///< eV per cm^-1 (CODATA 2018 hc)
    double amu_to_ev = 931.49410242e6;    ///< eV per amu (CODATA 2018)

    /// Throws InvalidParameter unless every constant is strictly positive.
    void validate() const;
};

double cm_inverse_to_ev(double wavenumber, const UnitConstants& u = {});

/// Rest energy of a mass given in amu. Throws InvalidParameter for m <= 0.
double amu_to_mass_energy(double mass_amu, const UnitConstants& u = {});

/// hbar^2 / (2 mu) in eV * Angstrom^2 for a reduced mass-energy mu c^2 in eV.
double hbar2_over_2mu(double mu_energy, const UnitConstants& u = {});

} // namespace hgm

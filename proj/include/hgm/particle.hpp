#pragma once

namespace hgm {

/// Reduced mass and hbar*c for the non-relativistic problem.
struct ParticleSpec
{
    double mu_energy = 1.0; ///< mu c^2, eV
    double hbar_c = 1973.29; ///< eV * A

    /// hbar^2 / (2 mu), eV * A^2.
    double kinetic() const { return hbar_c * hbar_c / (2.0 * mu_energy); }
};

} // namespace hgm

#pragma once

#include <utility>

#include "hgm/molecules.hpp"
#include "hgm/particle.hpp"
#include "hgm/potential.hpp"
#include "hgm/quantization.hpp"
#include "hgm/radial.hpp"
#include "hgm/spectrum_table.hpp"

namespace hgm {

/// Reduced coefficients of the approximated Schroedinger equation at energy E.
ReducedCoefficients nonrel_coefficients(const PotentialParams& p, const ParticleSpec& part,
                                        double energy, int l);

/// Closed-form level E_{n,l} of the approximated radial Schroedinger equation:
///
///   E = De - a alpha + (hbar^2 alpha^2 / 2mu) l(l+1) - (hbar^2 alpha^2 / 8mu) X^2,
///   X = [N^2 + (2mu/hbar^2)(b/alpha - 2 De q/alpha^2 - a/alpha - De q^2/alpha^2) + l(l+1)] / N,
///   N = n + 1/2 + sqrt(1/4 + l(l+1) + 2mu De q^2 / (hbar^2 alpha^2)).
///
/// Throws InvalidParameter for negative n or l.
double energy_nonrel(const PotentialParams& p, const ParticleSpec& part, int n, int l);

/// Same expression with +De q^2/alpha^2 inside the composite coefficient, as
/// it is commonly printed. Kept for comparison against published tables; it
/// does not solve the radial equation.
double energy_nonrel_printed(const PotentialParams& p, const ParticleSpec& part, int n, int l);

/// (omega, phi_exp) of the eigenfunction at energy E:
///   omega   = sqrt(2mu(De - E)/(hbar^2 alpha^2) + l(l+1) - 2mu a/(hbar^2 alpha))
///   phi_exp = 1/2 + sqrt(1/4 + l(l+1) + 2mu De q^2/(hbar^2 alpha^2))
/// Throws NoBoundState when omega is not real and positive.
std::pair<double, double> wavefunction_exponents(const PotentialParams& p,
                                                 const ParticleSpec& part, double energy, int l);

double radial_wavefunction(const WavefunctionSpec& spec, double r);

struct NormalizationReport
{
    double log_quadrature = 0.0;  ///< ln N from quadrature (authoritative)
    double log_closed_form = 0.0; ///< ln N from the Gamma-function closed form
    double ratio() const;         ///< N_closed / N_quadrature
};

/// Quadrature normalization of a wavefunction whose log_norm is ignored, along
/// with the closed-form constant for comparison.
NormalizationReport normalization_constant(const WavefunctionSpec& spec);

/// Normalized eigenfunction for level (n, l).
WavefunctionSpec nonrel_wavefunction(const PotentialParams& p, const ParticleSpec& part, int n,
                                     int l);

struct NonrelTableOptions
{
    int n_max = 5;
    int l_max = 5;
    bool rectangular = false; ///< all l <= l_max instead of l <= min(n, l_max)
    bool oracle = false;
    int grid_points = 20001;
    bool printed_formula = false;
    UnitConstants units{};
};

/// Levels for 0 <= n <= n_max and l <= min(n, l_max) (Table-2 layout).
SpectrumTable spectrum_table(const Molecule& m, double a, double b, double alpha,
                             const NonrelTableOptions& opts);

/// Same for explicit parameters; `label` fills the molecule column.
SpectrumTable spectrum_table(const std::string& label, const PotentialParams& p,
                             const ParticleSpec& part, const NonrelTableOptions& opts);

} // namespace hgm

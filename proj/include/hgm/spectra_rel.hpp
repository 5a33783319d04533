#pragma once

#include <optional>
#include <vector>

#include "hgm/potential.hpp"
#include "hgm/quantization.hpp"
#include "hgm/radial.hpp"

namespace hgm {

/// Potential, rest energy and hbar*c for the relativistic equations. The
/// default hbar_c = 1 keeps the natural-unit convention in which the energy
/// equations are usually quoted (lengths in A, energies in eV).
struct RelSystem
{
    PotentialParams potential;
    double mass = 0.0;
    double hbar_c = 1.0;
};

struct QuantumNumbers
{
    int n = 0;
    int l = 0;
    int kappa = -1;    ///< Dirac only; nonzero
    int dimension = 3; ///< Klein-Gordon only
};

/// (D + 2l - 1)(D + 2l - 3)/4.
double lambda_D(int D, int l);

// ---------------------------------------------------------------------------
// Klein-Gordon, equal scalar and vector potentials
// ---------------------------------------------------------------------------

struct KGAnsatz
{
    double eps = 0.0; ///< ((M^2 - E^2) + De (E + M)) / alpha^2
    double beta = 0.0;
    double eta = 0.0;
    double chi = 0.0;
    double kg_phi = 0.0;
    double gamma_rot = 0.0;
    double Lambda = 0.0;
    double delta_kg = 0.0; ///< sqrt(1/4 + kg_phi + Lambda); NaN when the radicand is negative

    ReducedCoefficients reduced() const;
};

KGAnsatz kg_ansatz(const RelSystem& sys, double energy, const QuantumNumbers& qn);

/// Same fields with E + M and E - M supplied directly; the nonrelativistic
/// limit replaces them by 2mu/hbar^2 and E_nl.
KGAnsatz kg_ansatz_from(const PotentialParams& p, double sum, double diff, double hbar_c,
                        const QuantumNumbers& qn);

/// Quantization mismatch eps - eps_n(E) scaled by alpha^2 hbar_c^2 / (E + M) to
/// energy units. Empty on a negative radicand or E + M <= 0.
std::optional<double> kg_residual(const RelSystem& sys, double energy, const QuantumNumbers& qn);
std::optional<double> kg_residual_from(const PotentialParams& p, double sum, double diff,
                                       double hbar_c, const QuantumNumbers& qn);

/// Fully expanded energy equation, (rhs - E^2 + M^2) / (E + M) (same sign as kg_residual):
///   E^2 - M^2 = (De - a alpha)(E + M) + alpha^2 Lambda - 1/4 [alpha X]^2,
///   alpha X = [alpha N^2 + (E + M)(b - a - 2 De q / alpha - De q^2 / alpha) + alpha Lambda] / N.
std::optional<double> kg_expanded_residual(const RelSystem& sys, double energy,
                                           const QuantumNumbers& qn);

// ---------------------------------------------------------------------------
// Dirac, spin symmetry (V - S = C_s)
// ---------------------------------------------------------------------------

struct SpinAnsatz
{
    double beta0 = 0.0, beta1 = 0.0, beta2 = 0.0;
    double delta0 = 0.0, delta1 = 0.0, delta2 = 0.0;
    double gamma0 = 0.0, gamma1 = 0.0;
    double Cs = 0.0;

    ReducedCoefficients reduced() const;
};

SpinAnsatz spin_ansatz(const RelSystem& sys, double energy, int kappa, double cs);
/// beta0 = M + E - C_s and beta2 = M - E supplied directly.
SpinAnsatz spin_ansatz_from(const PotentialParams& p, double beta0, double beta2, double hbar_c,
                            int kappa);

/// gamma1 - [delta1 + beta1 + bracket^2/4], scaled by alpha^2 hbar_c^2 / beta0.
std::optional<double> spin_residual(const RelSystem& sys, double energy, int kappa, double cs,
                                    int n);
std::optional<double> spin_residual_from(const PotentialParams& p, double beta0, double beta2,
                                         double hbar_c, int kappa, int n);

/// Expanded form, (lhs - rhs) / beta0:
///   beta0 (M - E + De) = beta0 a alpha - alpha^2 hbar_c^2 k(k+1) + (alpha^2 hbar_c^2 / 4) X^2.
std::optional<double> spin_expanded_residual(const RelSystem& sys, double energy, int kappa,
                                             double cs, int n);

// ---------------------------------------------------------------------------
// Dirac, pseudospin symmetry (V + S = C_ps)
// ---------------------------------------------------------------------------

struct PseudospinAnsatz
{
    double lambda0 = 0.0, lambda1 = 0.0, lambda2 = 0.0;
    double chi0 = 0.0, chi1 = 0.0, chi2 = 0.0;
    double theta1 = 0.0, theta2 = 0.0;
    double Cps = 0.0;

    ReducedCoefficients reduced() const;
};

PseudospinAnsatz pseudospin_ansatz(const RelSystem& sys, double energy, int kappa, double cps);

/// Scaled by -alpha^2 hbar_c^2 / lambda0.
std::optional<double> pseudospin_residual(const RelSystem& sys, double energy, int kappa,
                                          double cps, int n);

/// Expanded form, (lhs - rhs) / lambda0:
///   (De - M - E) lambda0 = lambda0 a alpha + alpha^2 hbar_c^2 k(k-1) - (alpha^2 hbar_c^2 / 4) X^2,
///   X = [N^2 + lambda0 (a - b + 2 De q / alpha + De q^2 / alpha) / (alpha hbar_c^2) + k(k-1)] / N,
///   N = n + 1/2 + sqrt(1/4 + k(k-1) - lambda0 De q^2 / (alpha hbar_c)^2).
std::optional<double> pseudospin_expanded_residual(const RelSystem& sys, double energy, int kappa,
                                                   double cps, int n);

// ---------------------------------------------------------------------------
// Solvers
// ---------------------------------------------------------------------------

struct SolveOptions
{
    std::optional<double> lo; ///< default: the window where the state can be bound
    std::optional<double> hi;
    int scan_points = 2000;
    double tol = 1e-12;
    bool all_roots = false; ///< keep both signs of E
};

struct RelLevel
{
    double energy = 0.0;
    double residual = 0.0;
    double cross_check_residual = 0.0;
};

/// Energy range in which a level of the given model can be bound:
/// the reference energy must lie between the bottom of the approximated
/// well and its asymptote, and the coupling must have the binding sign.
std::pair<double, double> kg_window(const RelSystem& sys);
std::pair<double, double> spin_window(const RelSystem& sys, double cs);
std::pair<double, double> pseudospin_window(const RelSystem& sys, int kappa, double cps);

/// Roots of the residual in ascending order, keeping only roots whose implied
/// decay exponent is positive. Throws NoBoundState when none remain.
std::vector<RelLevel> solve_kg_energy(const RelSystem& sys, const QuantumNumbers& qn,
                                      const SolveOptions& opts = {});
/// E > 0 unless all_roots.
std::vector<RelLevel> solve_dirac_spin(const RelSystem& sys, int kappa, double cs, int n,
                                       const SolveOptions& opts = {});
/// E < 0 unless all_roots.
std::vector<RelLevel> solve_dirac_pseudospin(const RelSystem& sys, int kappa, double cps, int n,
                                             const SolveOptions& opts = {});

// ---------------------------------------------------------------------------
// Radial functions (quadrature-normalized)
// ---------------------------------------------------------------------------

/// Throws NoBoundState when the exponents at E do not describe a normalizable state.
WavefunctionSpec kg_wavefunction(const RelSystem& sys, double energy, const QuantumNumbers& qn);
WavefunctionSpec spin_wavefunction(const RelSystem& sys, double energy, int kappa, double cs,
                                   int n);
WavefunctionSpec pseudospin_wavefunction(const RelSystem& sys, double energy, int kappa,
                                         double cps, int n);

double upper_spinor(const RelSystem& sys, double energy, int kappa, double cs, int n, double r);
double lower_spinor(const RelSystem& sys, double energy, int kappa, double cps, int n, double r);

} // namespace hgm

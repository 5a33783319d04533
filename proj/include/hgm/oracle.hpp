#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hgm/particle.hpp"
#include "hgm/potential.hpp"

namespace hgm {

/// Radial mesh [r_min, r_max] with `points` nodes (Dirichlet at both ends).
struct RadialGrid
{
    double r_min = 1e-3;
    double r_max = 1.0;
    int points = 20001;

    double spacing() const { return (r_max - r_min) / (points - 1); }

    /// Validates 0 < r_min < r_max; throws GridTooCoarse for points < 100.
    static RadialGrid make(double r_min, double r_max, int points);
};

// ---------------------------------------------------------------------------
// Finite-difference Schroedinger eigensolver
// ---------------------------------------------------------------------------

/// Lowest k eigenvalues of -c u'' + U(r) u = E u on the grid, second-order
/// central differences, Sturm-sequence bisection. Throws GridTooCoarse when
/// k > points / 10.
std::vector<double> fd_radial_eigen(const std::function<double(double)>& effective_potential,
                                    double kinetic, const RadialGrid& g, int k);

/// Eigenvector (interior nodes) for an eigenvalue of the same discretization.
std::vector<double> fd_radial_eigenvector(const std::function<double(double)>& effective_potential,
                                          double kinetic, const RadialGrid& g, double eigenvalue);

/// Interior sign changes of a sampled function, ignoring exact zeros.
int count_sign_changes(const std::vector<double>& values);

/// Effective potential V_approx(r) + (hbar^2/2mu) l(l+1) alpha^2/(1 - e^{-alpha r})^2.
std::function<double(double)> nonrel_effective_potential(const PotentialParams& p,
                                                         const ParticleSpec& part, int l);

/// Lowest k levels of the approximated radial Schroedinger equation.
std::vector<double> fd_schrodinger_eigen(const PotentialParams& p, const ParticleSpec& part, int l,
                                         const RadialGrid& g, int k);

/// Grid default: r_min = 1e-3 A, r_max = 40/alpha.
RadialGrid default_grid(const PotentialParams& p, int points = 20001);

/// Grid fitted to the lowest k levels: the classically allowed region below a
/// level estimate plus 30 decay lengths (WKB) on each side, clipped to the
/// default grid's interval.
RadialGrid fitted_grid(const std::function<double(double)>& effective_potential, double kinetic,
                       const RadialGrid& outer, int k);

struct Extrapolated
{
    double coarse;
    double fine;
    double value;
    double error_estimate;
};

/// (fine + (fine - coarse)/(ratio^order - 1), |fine - coarse|).
Extrapolated richardson_extrapolate(double e_coarse, double e_fine, double ratio, int order);

/// Lowest k levels on g and on the grid with halved spacing, Richardson-combined.
std::vector<Extrapolated> fd_extrapolated(const std::function<double(double)>& effective_potential,
                                          double kinetic, const RadialGrid& g, int k);

/// Convenience wrapper: fitted grid + extrapolation for the Schroedinger problem.
std::vector<Extrapolated> schrodinger_oracle(const PotentialParams& p, const ParticleSpec& part,
                                             int l, int k, int points = 20001);

// ---------------------------------------------------------------------------
// Shooting verifier for u'' + W(r; E) u = 0
// ---------------------------------------------------------------------------

/// W(r; E) of a radial equation u'' + W u = 0.
using RadialCoefficient = std::function<double(double r, double energy)>;

/// W = P(E) (Q(E) - V_approx(r)) - L alpha^2 / (1 - e^{-alpha r})^2.
struct CoupledRadialEquation
{
    PotentialParams potential;
    std::function<double(double)> coupling;  ///< P(E)
    std::function<double(double)> reference; ///< Q(E)
    double barrier = 0.0;                    ///< L

    double operator()(double r, double energy) const;
};

CoupledRadialEquation nonrel_equation(const PotentialParams& p, const ParticleSpec& part, int l);
CoupledRadialEquation kg_equation(const PotentialParams& p, double mass, int dimension, int l,
                                  double hbar_c);
CoupledRadialEquation spin_equation(const PotentialParams& p, double mass, int kappa, double cs,
                                    double hbar_c);
CoupledRadialEquation pseudospin_equation(const PotentialParams& p, double mass, int kappa,
                                          double cps, double hbar_c);

struct Mismatch
{
    double log_derivative; ///< u_L'/u_L - u_R'/u_R at r_match
    double wronskian;      ///< scale-free u_L' u_R - u_L u_R'; continuous in E
    double r_match;
};

/// Numerov integration from both ends on a logarithmic mesh spanning the grid
/// (u = sqrt(r) y, x = ln r), with a power-law start at r_min. r_match <= 0
/// selects the maximum of W on the mesh.
Mismatch shoot_mismatch(const RadialCoefficient& ode, double energy, const RadialGrid& g,
                        double r_match = 0.0);

/// Mesh for shooting at energies near `energy`: classically allowed region of
/// W plus 40 decay lengths outward, starting at r_floor.
RadialGrid shooting_grid(const RadialCoefficient& ode, double energy, double alpha,
                         int points = 20001, double r_floor = 1e-6);

/// True when the Wronskian changes sign between energy - window and energy + window.
bool shooting_brackets(const RadialCoefficient& ode, double energy, double window, double alpha,
                       int points = 20001);

/// Energy where the Wronskian changes sign inside energy +- window, located by
/// bisection on a mesh fixed at `energy`. Empty when there is no sign change.
std::optional<double> shooting_eigenvalue(const RadialCoefficient& ode, double energy,
                                          double window, double alpha, int points = 20001);

} // namespace hgm

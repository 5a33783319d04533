#pragma once

#include <vector>

namespace hgm {

/// Hellmann + generalized Morse (Deng-Fan) potential constants.
///
///   V(r) = -a/r + b e^{-alpha r}/r + De (1 - q/(e^{alpha r} - 1))^2,
///   q    = e^{alpha re} - 1.
///
/// Energies in eV, lengths in Angstrom. Build through make_potential() so
/// that q is always consistent with (alpha, re).
struct PotentialParams
{
    double a = 0.0;     ///< Coulomb strength, eV*A
    double b = 0.0;     ///< Yukawa strength, eV*A
    double De = 0.0;    ///< dissociation energy, eV
    double re = 1.0;    ///< equilibrium bond length, A
    double alpha = 1.0; ///< screening parameter, 1/A
    double q = 0.0;     ///< e^{alpha re} - 1
};

/// e^{alpha re} - 1, computed without cancellation for small alpha*re.
double q_of(double alpha, double re);

/// Validates alpha > 0, re > 0, De >= 0 and derives q.
PotentialParams make_potential(double a, double b, double De, double re, double alpha);

double potential_exact(const PotentialParams& p, double r);

/// Potential with every 1/r replaced by alpha/(1 - e^{-alpha r}).
double potential_approx(const PotentialParams& p, double r);

/// L * alpha^2 / (1 - e^{-alpha r})^2, the approximated L/r^2 barrier.
double centrifugal_approx(double alpha, double r, double L);

/// Large-r limit of potential_approx: De - a*alpha.
double potential_approx_asymptote(const PotentialParams& p);

struct CurveRow
{
    double r;
    double v_exact;
    double v_approx;
};

/// Uniform samples on [r_min, r_max], both endpoints included.
std::vector<CurveRow> potential_curve(const PotentialParams& p, double r_min, double r_max,
                                      int samples);

} // namespace hgm

#include "hgm/spectra_rel.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "hgm/error.hpp"
#include "hgm/rootfind.hpp"

namespace hgm {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_n(int n)
{
    if (n < 0) throw InvalidParameter("n must be non-negative, got " + std::to_string(n));
}

void require_kappa(int kappa)
{
    if (kappa == 0) throw InvalidParameter("kappa must be nonzero");
}

void require_system(const RelSystem& sys)
{
    if (!(sys.mass > 0.0)) throw InvalidParameter("mass must be positive");
    if (!(sys.hbar_c > 0.0)) throw InvalidParameter("hbar_c must be positive");
}

// (eps - eps_n) * scale, where scale turns the dimensionless mismatch into energy.
std::optional<double> scaled_residual(const ReducedCoefficients& c, int n, double scale)
{
    const auto r = c.residual(n);
    if (!r || !std::isfinite(scale)) return std::nullopt;
    return *r * scale;
}

// Generic expanded form shared by all three models, written out in energies:
//   (De - Q) - a alpha + L alpha^2 h^2 / P - alpha^2 h^2 X^2 / (4 P)
// with P the coupling (without 1/h^2), Q the reference energy.
std::optional<double> expanded(const PotentialParams& p, double P, double Q, double L, int n,
                               double h)
{
    const double ah2 = p.alpha * p.alpha * h * h;
    const double edge = 0.25 + L + P * p.De * p.q * p.q / ah2;
    if (!(edge >= 0.0) || P == 0.0) return std::nullopt;
    const double N = n + 0.5 + std::sqrt(edge);
    const double composite =
        P * (p.b - p.a - 2.0 * p.De * p.q / p.alpha - p.De * p.q * p.q / p.alpha)
        / (p.alpha * h * h);
    const double X = (N * N + composite + L) / N;
    return (p.De - Q) - p.a * p.alpha + L * ah2 / P - ah2 * X * X / (4.0 * P);
}

// Lowest value of the approximated potential, sampled on a log mesh.
double approx_well_bottom(const PotentialParams& p)
{
    const double r_lo = 1e-4, r_hi = 40.0 / p.alpha;
    const int samples = 4000;
    double best = potential_approx_asymptote(p);
    for (int i = 0; i < samples; ++i) {
        const double r = r_lo * std::pow(r_hi / r_lo, i / (samples - 1.0));
        best = std::min(best, potential_approx(p, r));
    }
    return best;
}

using Residual = std::function<std::optional<double>(double)>;
using Exponent = std::function<std::optional<double>(double)>;
using Expanded = std::function<std::optional<double>(double)>;

std::vector<RelLevel> solve(const Residual& f, const Exponent& lead, const Expanded& cross,
                            std::pair<double, double> window, const SolveOptions& opts,
                            int sign, const std::string& what)
{
    const double lo = opts.lo.value_or(window.first);
    const double hi = opts.hi.value_or(window.second);
    if (!(lo < hi))
        throw NoBoundState(what + ": empty search interval [" + std::to_string(lo) + ", "
                           + std::to_string(hi) + "]");
    if (opts.scan_points < 2) throw InvalidParameter("scan points must be at least 2");
    if (!(opts.tol > 0.0)) throw InvalidParameter("tolerance must be positive");

    // keep the scan strictly inside the interval
    const double ulp = std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi));
    const double pad = std::max(1e-9 * (hi - lo), 4.0 * ulp);
    std::vector<RelLevel> out;
    for (const auto& br : scan_brackets(f, lo + pad, hi - pad, opts.scan_points)) {
        const auto root = bisect(f, br, opts.tol);
        const auto nu = lead(root.root);
        if (!nu || !(*nu > 0.0)) continue;
        if (!opts.all_roots && sign != 0 && sign * root.root <= 0.0) continue;
        RelLevel lvl;
        lvl.energy = root.root;
        lvl.residual = f(root.root).value_or(root.f_root);
        lvl.cross_check_residual = cross(root.root).value_or(kNaN);
        out.push_back(lvl);
    }
    if (out.empty()) throw NoBoundState(what + ": no bound state in the search interval");
    return out;
}

} // namespace

double lambda_D(int D, int l)
{
    if (D < 1) throw InvalidParameter("dimension must be at least 1");
    if (l < 0) throw InvalidParameter("l must be non-negative");
    return (D + 2.0 * l - 1.0) * (D + 2.0 * l - 3.0) / 4.0;
}

// ---------------------------------------------------------------------------

ReducedCoefficients KGAnsatz::reduced() const
{
    return {eps, beta, eta, chi, kg_phi, gamma_rot};
}

KGAnsatz kg_ansatz_from(const PotentialParams& p, double sum, double diff, double hbar_c,
                        const QuantumNumbers& qn)
{
    const double a2 = p.alpha * p.alpha;
    const double h2 = hbar_c * hbar_c;
    KGAnsatz k;
    k.eps = sum * (p.De - diff) / (a2 * h2);
    k.beta = p.a * sum / (p.alpha * h2);
    k.eta = p.b * sum / (p.alpha * h2);
    k.chi = 2.0 * p.De * p.q * sum / (a2 * h2);
    k.kg_phi = p.De * p.q * p.q * sum / (a2 * h2);
    k.Lambda = lambda_D(qn.dimension, qn.l);
    k.gamma_rot = k.Lambda;
    const double rad = 0.25 + k.kg_phi + k.Lambda;
    k.delta_kg = rad >= 0.0 ? std::sqrt(rad) : kNaN;
    return k;
}

KGAnsatz kg_ansatz(const RelSystem& sys, double energy, const QuantumNumbers& qn)
{
    return kg_ansatz_from(sys.potential, energy + sys.mass, energy - sys.mass, sys.hbar_c, qn);
}

std::optional<double> kg_residual_from(const PotentialParams& p, double sum, double diff,
                                       double hbar_c, const QuantumNumbers& qn)
{
    require_n(qn.n);
    if (!(sum > 0.0)) return std::nullopt;
    const auto k = kg_ansatz_from(p, sum, diff, hbar_c, qn);
    return scaled_residual(k.reduced(), qn.n, p.alpha * p.alpha * hbar_c * hbar_c / sum);
}

std::optional<double> kg_residual(const RelSystem& sys, double energy, const QuantumNumbers& qn)
{
    return kg_residual_from(sys.potential, energy + sys.mass, energy - sys.mass, sys.hbar_c, qn);
}

std::optional<double> kg_expanded_residual(const RelSystem& sys, double energy,
                                           const QuantumNumbers& qn)
{
    const double sum = energy + sys.mass;
    if (!(sum > 0.0)) return std::nullopt;
    return expanded(sys.potential, sum, energy - sys.mass, lambda_D(qn.dimension, qn.l), qn.n,
                    sys.hbar_c);
}

// ---------------------------------------------------------------------------

ReducedCoefficients SpinAnsatz::reduced() const
{
    return {gamma1, delta1, delta2, delta0, gamma0, beta1};
}

SpinAnsatz spin_ansatz_from(const PotentialParams& p, double beta0, double beta2, double hbar_c,
                            int kappa)
{
    require_kappa(kappa);
    const double a2h2 = p.alpha * p.alpha * hbar_c * hbar_c;
    SpinAnsatz s;
    s.beta0 = beta0;
    s.beta1 = kappa * (kappa + 1.0);
    s.beta2 = beta2;
    s.delta0 = 2.0 * beta0 * p.De * p.q / a2h2;
    s.delta1 = beta0 * p.a / (p.alpha * hbar_c * hbar_c);
    s.delta2 = beta0 * p.b / (p.alpha * hbar_c * hbar_c);
    s.gamma0 = beta0 * p.De * p.q * p.q / a2h2;
    s.gamma1 = beta0 * (beta2 + p.De) / a2h2;
    return s;
}

SpinAnsatz spin_ansatz(const RelSystem& sys, double energy, int kappa, double cs)
{
    auto s = spin_ansatz_from(sys.potential, sys.mass + energy - cs, sys.mass - energy,
                              sys.hbar_c, kappa);
    s.Cs = cs;
    return s;
}

std::optional<double> spin_residual_from(const PotentialParams& p, double beta0, double beta2,
                                         double hbar_c, int kappa, int n)
{
    require_n(n);
    if (!(beta0 > 0.0)) return std::nullopt;
    const auto s = spin_ansatz_from(p, beta0, beta2, hbar_c, kappa);
    return scaled_residual(s.reduced(), n, p.alpha * p.alpha * hbar_c * hbar_c / beta0);
}

std::optional<double> spin_residual(const RelSystem& sys, double energy, int kappa, double cs,
                                    int n)
{
    return spin_residual_from(sys.potential, sys.mass + energy - cs, sys.mass - energy,
                              sys.hbar_c, kappa, n);
}

std::optional<double> spin_expanded_residual(const RelSystem& sys, double energy, int kappa,
                                             double cs, int n)
{
    require_kappa(kappa);
    const double beta0 = sys.mass + energy - cs;
    if (!(beta0 > 0.0)) return std::nullopt;
    return expanded(sys.potential, beta0, energy - sys.mass, kappa * (kappa + 1.0), n,
                    sys.hbar_c);
}

// ---------------------------------------------------------------------------

ReducedCoefficients PseudospinAnsatz::reduced() const
{
    // the lower component sees the coupling with the opposite sign
    return {chi0, -chi1, -chi2, -theta2, -theta1, lambda1};
}

PseudospinAnsatz pseudospin_ansatz(const RelSystem& sys, double energy, int kappa, double cps)
{
    require_kappa(kappa);
    const auto& p = sys.potential;
    const double h2 = sys.hbar_c * sys.hbar_c;
    const double a2h2 = p.alpha * p.alpha * h2;
    PseudospinAnsatz s;
    s.lambda0 = sys.mass - energy + cps;
    s.lambda1 = kappa * (kappa - 1.0);
    s.lambda2 = sys.mass + energy;
    s.chi0 = -(p.De - s.lambda2) * s.lambda0 / a2h2;
    s.chi1 = s.lambda0 * p.a / (p.alpha * h2);
    s.chi2 = s.lambda0 * p.b / (p.alpha * h2);
    s.theta1 = p.De * p.q * p.q * s.lambda0 / a2h2;
    s.theta2 = 2.0 * p.De * p.q * s.lambda0 / a2h2;
    s.Cps = cps;
    return s;
}

std::optional<double> pseudospin_residual(const RelSystem& sys, double energy, int kappa,
                                          double cps, int n)
{
    require_n(n);
    const auto s = pseudospin_ansatz(sys, energy, kappa, cps);
    if (!(s.lambda0 > 0.0)) return std::nullopt;
    const auto& p = sys.potential;
    return scaled_residual(s.reduced(), n,
                           -p.alpha * p.alpha * sys.hbar_c * sys.hbar_c / s.lambda0);
}

std::optional<double> pseudospin_expanded_residual(const RelSystem& sys, double energy, int kappa,
                                                   double cps, int n)
{
    require_kappa(kappa);
    const double lambda0 = sys.mass - energy + cps;
    if (!(lambda0 > 0.0)) return std::nullopt;
    return expanded(sys.potential, -lambda0, sys.mass + energy, kappa * (kappa - 1.0), n,
                    sys.hbar_c);
}

// ---------------------------------------------------------------------------

std::pair<double, double> kg_window(const RelSystem& sys)
{
    require_system(sys);
    const double M = sys.mass;
    const double bottom = approx_well_bottom(sys.potential);
    return {std::max(-M, M + bottom), M + potential_approx_asymptote(sys.potential)};
}

std::pair<double, double> spin_window(const RelSystem& sys, double cs)
{
    require_system(sys);
    const double M = sys.mass;
    const double bottom = approx_well_bottom(sys.potential);
    return {std::max(cs - M, M + bottom), M + potential_approx_asymptote(sys.potential)};
}

std::pair<double, double> pseudospin_window(const RelSystem& sys, int kappa, double cps)
{
    require_system(sys);
    require_kappa(kappa);
    const auto& p = sys.potential;
    const double M = sys.mass;
    double lo = potential_approx_asymptote(p) - M;
    // the (1 - s) exponent stays real only while lambda0 is below this bound
    const double dq2 = p.De * p.q * p.q;
    if (dq2 > 0.0) {
        const double lambda0_max = (0.25 + kappa * (kappa - 1.0)) * p.alpha * p.alpha
                                   * sys.hbar_c * sys.hbar_c / dq2;
        lo = std::max(lo, M + cps - lambda0_max);
    }
    return {lo, M + cps};
}

std::vector<RelLevel> solve_kg_energy(const RelSystem& sys, const QuantumNumbers& qn,
                                      const SolveOptions& opts)
{
    require_system(sys);
    require_n(qn.n);
    lambda_D(qn.dimension, qn.l);
    auto f = [&](double E) { return kg_residual(sys, E, qn); };
    auto lead = [&](double E) {
        return kg_ansatz(sys, E, qn).reduced().leading_exponent(qn.n);
    };
    auto cross = [&](double E) { return kg_expanded_residual(sys, E, qn); };
    return solve(f, lead, cross, kg_window(sys), opts, 0, "Klein-Gordon");
}

std::vector<RelLevel> solve_dirac_spin(const RelSystem& sys, int kappa, double cs, int n,
                                       const SolveOptions& opts)
{
    require_system(sys);
    require_kappa(kappa);
    require_n(n);
    auto f = [&](double E) { return spin_residual(sys, E, kappa, cs, n); };
    auto lead = [&](double E) {
        return spin_ansatz(sys, E, kappa, cs).reduced().leading_exponent(n);
    };
    auto cross = [&](double E) { return spin_expanded_residual(sys, E, kappa, cs, n); };
    return solve(f, lead, cross, spin_window(sys, cs), opts, +1, "Dirac spin symmetry");
}

std::vector<RelLevel> solve_dirac_pseudospin(const RelSystem& sys, int kappa, double cps, int n,
                                             const SolveOptions& opts)
{
    require_system(sys);
    require_kappa(kappa);
    require_n(n);
    auto f = [&](double E) { return pseudospin_residual(sys, E, kappa, cps, n); };
    auto lead = [&](double E) {
        return pseudospin_ansatz(sys, E, kappa, cps).reduced().leading_exponent(n);
    };
    auto cross = [&](double E) { return pseudospin_expanded_residual(sys, E, kappa, cps, n); };
    return solve(f, lead, cross, pseudospin_window(sys, kappa, cps), opts, -1,
                 "Dirac pseudospin symmetry");
}

// ---------------------------------------------------------------------------

namespace {

WavefunctionSpec make_spec(const ReducedCoefficients& c, int n, double alpha)
{
    require_n(n);
    const double lead = c.leading_radicand();
    const auto edge = c.edge_exponent();
    if (!(lead > 0.0) || !edge)
        throw NoBoundState("exponents do not describe a bound state at this energy");
    WavefunctionSpec w;
    w.omega = std::sqrt(lead);
    w.phi_exp = *edge;
    w.n = n;
    w.alpha = alpha;
    require_normalizable(w.omega, w.phi_exp);
    return normalize_by_quadrature(w);
}

} // namespace

WavefunctionSpec kg_wavefunction(const RelSystem& sys, double energy, const QuantumNumbers& qn)
{
    return make_spec(kg_ansatz(sys, energy, qn).reduced(), qn.n, sys.potential.alpha);
}

WavefunctionSpec spin_wavefunction(const RelSystem& sys, double energy, int kappa, double cs,
                                   int n)
{
    return make_spec(spin_ansatz(sys, energy, kappa, cs).reduced(), n, sys.potential.alpha);
}

WavefunctionSpec pseudospin_wavefunction(const RelSystem& sys, double energy, int kappa,
                                         double cps, int n)
{
    return make_spec(pseudospin_ansatz(sys, energy, kappa, cps).reduced(), n,
                     sys.potential.alpha);
}

double upper_spinor(const RelSystem& sys, double energy, int kappa, double cs, int n, double r)
{
    return spin_wavefunction(sys, energy, kappa, cs, n)(r);
}

double lower_spinor(const RelSystem& sys, double energy, int kappa, double cps, int n, double r)
{
    return pseudospin_wavefunction(sys, energy, kappa, cps, n)(r);
}

} // namespace hgm

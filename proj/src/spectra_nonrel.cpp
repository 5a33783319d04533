#include "hgm/spectra_nonrel.hpp"

#include <cmath>
#include <map>
#include <string>

#include "hgm/error.hpp"
#include "hgm/oracle.hpp"

namespace hgm {

namespace {

void require_quantum_numbers(int n, int l)
{
    if (n < 0) throw InvalidParameter("n must be non-negative, got " + std::to_string(n));
    if (l < 0) throw InvalidParameter("l must be non-negative, got " + std::to_string(l));
}

double coupling(const ParticleSpec& part)
{
    if (!(part.mu_energy > 0.0)) throw InvalidParameter("reduced mass must be positive");
    return 1.0 / part.kinetic(); // 2mu/hbar^2
}

} // namespace

ReducedCoefficients nonrel_coefficients(const PotentialParams& p, const ParticleSpec& part,
                                        double energy, int l)
{
    const double K = coupling(part);
    const double a2 = p.alpha * p.alpha;
    ReducedCoefficients c;
    c.eps = K * (p.De - energy) / a2;
    c.beta = K * p.a / p.alpha;
    c.eta = K * p.b / p.alpha;
    c.chi = 2.0 * K * p.De * p.q / a2;
    c.phi = K * p.De * p.q * p.q / a2;
    c.gamma = l * (l + 1.0);
    return c;
}

double energy_nonrel(const PotentialParams& p, const ParticleSpec& part, int n, int l)
{
    require_quantum_numbers(n, l);
    const double K = coupling(part);
    const double a2 = p.alpha * p.alpha;
    const double L = l * (l + 1.0);
    const double N = n + 0.5 + std::sqrt(0.25 + L + K * p.De * p.q * p.q / a2);
    const double composite =
        K * (p.b / p.alpha - 2.0 * p.De * p.q / a2 - p.a / p.alpha - p.De * p.q * p.q / a2);
    const double X = (N * N + composite + L) / N;
    return p.De - p.a * p.alpha + a2 * L / K - a2 / (4.0 * K) * X * X;
}

double energy_nonrel_printed(const PotentialParams& p, const ParticleSpec& part, int n, int l)
{
    require_quantum_numbers(n, l);
    const double K = coupling(part);
    const double a2 = p.alpha * p.alpha;
    const double L = l * (l + 1.0);
    const double N = n + 0.5 + std::sqrt(0.25 + L + K * p.De * p.q * p.q / a2);
    const double composite =
        K * (p.b / p.alpha - 2.0 * p.De * p.q / a2 - p.a / p.alpha + p.De * p.q * p.q / a2);
    const double X = (N * N + composite + L) / N;
    return p.De - p.a * p.alpha + a2 * L / K - a2 / (4.0 * K) * X * X;
}

std::pair<double, double> wavefunction_exponents(const PotentialParams& p,
                                                 const ParticleSpec& part, double energy, int l)
{
    if (l < 0) throw InvalidParameter("l must be non-negative");
    const auto c = nonrel_coefficients(p, part, energy, l);
    const double lead = c.leading_radicand();
    if (!(lead > 0.0))
        throw NoBoundState("no decaying solution at E = " + std::to_string(energy));
    return {std::sqrt(lead), *c.edge_exponent()};
}

double radial_wavefunction(const WavefunctionSpec& spec, double r)
{
    return spec(r);
}

double NormalizationReport::ratio() const
{
    return std::exp(log_closed_form - log_quadrature);
}

NormalizationReport normalization_constant(const WavefunctionSpec& spec)
{
    require_normalizable(spec.omega, spec.phi_exp);
    NormalizationReport rep;
    rep.log_quadrature = normalize_by_quadrature(spec).log_norm;
    rep.log_closed_form = log_closed_form_norm(spec.omega, spec.phi_exp, spec.n, spec.alpha);
    return rep;
}

WavefunctionSpec nonrel_wavefunction(const PotentialParams& p, const ParticleSpec& part, int n,
                                     int l)
{
    const double E = energy_nonrel(p, part, n, l);
    const auto [omega, phi_exp] = wavefunction_exponents(p, part, E, l);
    // at the closed-form energy omega also equals -bracket/2; a negative
    // bracket root would mean the state is not normalizable
    const auto implied = nonrel_coefficients(p, part, E, l).leading_exponent(n);
    if (!implied || !(*implied > 0.0))
        throw NoBoundState("level n=" + std::to_string(n) + " l=" + std::to_string(l)
                           + " is above the binding threshold");
    WavefunctionSpec w;
    w.omega = omega;
    w.phi_exp = phi_exp;
    w.n = n;
    w.alpha = p.alpha;
    require_normalizable(w.omega, w.phi_exp);
    return normalize_by_quadrature(w);
}

SpectrumTable spectrum_table(const Molecule& m, double a, double b, double alpha,
                             const NonrelTableOptions& opts)
{
    const auto [p, part] = to_potential_params(m, a, b, alpha, opts.units);
    return spectrum_table(m.name, p, part, opts);
}

SpectrumTable spectrum_table(const std::string& label, const PotentialParams& p,
                             const ParticleSpec& part, const NonrelTableOptions& opts)
{
    if (opts.n_max < 0 || opts.l_max < 0)
        throw InvalidParameter("n_max and l_max must be non-negative");

    SpectrumTable table;
    std::map<int, std::vector<double>> oracle_levels; // per l, lowest n_max+1 levels

    for (int n = 0; n <= opts.n_max; ++n) {
        const int l_top = opts.rectangular ? opts.l_max : std::min(n, opts.l_max);
        for (int l = 0; l <= l_top; ++l) {
            SpectrumRow row;
            row.molecule = label;
            row.model = "nonrel";
            row.n = n;
            row.l = l;
            try {
                const double E = opts.printed_formula ? energy_nonrel_printed(p, part, n, l)
                                                      : energy_nonrel(p, part, n, l);
                const auto lead = nonrel_coefficients(p, part, E, l).leading_exponent(n);
                if (!opts.printed_formula && (!lead || !(*lead > 0.0)))
                    throw NoBoundState("above the binding threshold");
                row.energy = E;
                if (opts.oracle) {
                    auto it = oracle_levels.find(l);
                    if (it == oracle_levels.end()) {
                        std::vector<double> levels;
                        for (const auto& x : schrodinger_oracle(p, part, l, opts.n_max + 1,
                                                                opts.grid_points))
                            levels.push_back(x.value);
                        it = oracle_levels.emplace(l, std::move(levels)).first;
                    }
                    row.oracle_energy = it->second.at(static_cast<std::size_t>(n));
                }
            } catch (const NoBoundState&) {
                row.energy.reset();
                row.status = "NoBoundState";
            } catch (const GridTooCoarse&) {
                row.status = "GridTooCoarse";
            }
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

} // namespace hgm

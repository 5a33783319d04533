#include "hgm/radial.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "hgm/error.hpp"
#include "hgm/specfun.hpp"

namespace hgm {

namespace {

double log_s(double alpha, double r)
{
    return -alpha * r;
}

double log_one_minus_s(double alpha, double r)
{
    return std::log(-std::expm1(-alpha * r));
}

double polynomial(const WavefunctionSpec& w, double s)
{
    return jacobi_poly({2.0 * w.omega, 2.0 * w.phi_exp - 1.0, w.n}, 1.0 - 2.0 * s);
}

} // namespace

void require_normalizable(double omega, double phi_exp)
{
    if (!(omega > 0.0))
        throw NoBoundState("leading exponent must be positive, got " + std::to_string(omega));
    if (!(phi_exp > 0.5))
        throw NoBoundState("edge exponent must exceed 1/2, got " + std::to_string(phi_exp));
}

double WavefunctionSpec::norm() const
{
    return std::exp(log_norm);
}

double WavefunctionSpec::log_envelope(double r) const
{
    return omega * log_s(alpha, r) + phi_exp * log_one_minus_s(alpha, r);
}

double WavefunctionSpec::operator()(double r) const
{
    if (!(r > 0.0)) throw InvalidParameter("radius must be positive");
    const double s = std::exp(-alpha * r);
    return std::exp(log_norm + log_envelope(r)) * polynomial(*this, s);
}

double WavefunctionSpec::envelope_peak() const
{
    // d/dr [omega ln s + phi ln(1-s)] = 0  =>  s/(1-s) = omega/phi
    const double s_peak = omega / (omega + phi_exp);
    return -std::log(s_peak) / alpha;
}

std::pair<double, double> WavefunctionSpec::support(double margin) const
{
    const double r_peak = envelope_peak();
    const double top = 2.0 * log_envelope(r_peak);
    auto below = [&](double r) { return 2.0 * log_envelope(r) < top - margin; };

    // The envelope log is concave in r, so each side has one crossing.
    double lo = r_peak;
    double step = r_peak;
    double inner = r_peak;
    while (!below(inner) && inner > 1e-300) inner *= 0.5;
    lo = inner;
    double hi_in = r_peak;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi_in);
        (below(mid) ? lo : hi_in) = mid;
    }

    double outer = r_peak + step;
    while (!below(outer)) {
        step *= 2.0;
        outer = r_peak + step;
    }
    double lo_out = r_peak;
    double hi = outer;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo_out + hi);
        (below(mid) ? hi : lo_out) = mid;
    }
    return {lo, hi};
}

WavefunctionSpec normalize_by_quadrature(WavefunctionSpec spec)
{
    require_normalizable(spec.omega, spec.phi_exp);
    spec.log_norm = 0.0;
    const auto [lo, hi] = spec.support();
    const double shift = spec.log_envelope(spec.envelope_peak());

    auto integrand = [&](double r) {
        const double s = std::exp(-spec.alpha * r);
        const double u = std::exp(spec.log_envelope(r) - shift) * polynomial(spec, s);
        return u * u;
    };

    // The polynomial adds up to n nodes; equal panels keep each one smooth.
    const int panels = 32 + 8 * spec.n;
    const double width = (hi - lo) / panels;
    double total = 0.0;
    for (int i = 0; i < panels; ++i) {
        const double a = lo + width * i;
        const double b = (i == panels - 1) ? hi : a + width;
        total += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(integrand, a, b, 6,
                                                                              1e-12);
    }
    if (!(total > 0.0) || !std::isfinite(total))
        throw NonConvergence("normalization integral is not positive and finite");
    spec.log_norm = -shift - 0.5 * std::log(total);
    return spec;
}

double log_closed_form_norm(double omega, double phi_exp, int n, double alpha)
{
    require_normalizable(omega, phi_exp);
    const double log_sq = ln_gamma(n + 1.0) + std::log(2.0 * omega * alpha)
                          + ln_gamma(2.0 * omega + 2.0 * phi_exp + n + 1.0)
                          - ln_gamma(2.0 * omega + n + 1.0) - ln_gamma(2.0 * phi_exp + n + 1.0);
    return 0.5 * log_sq;
}

int count_nodes(const WavefunctionSpec& spec, int samples)
{
    const auto [lo, hi] = spec.support(60.0);
    int nodes = 0;
    double prev = 0.0;
    for (int i = 1; i < samples - 1; ++i) {
        const double r = lo + (hi - lo) * i / (samples - 1);
        const double s = std::exp(-spec.alpha * r);
        const double v = polynomial(spec, s);
        if (v != 0.0) {
            if (prev != 0.0 && (v < 0.0) != (prev < 0.0)) ++nodes;
            prev = v;
        }
    }
    return nodes;
}

} // namespace hgm

#pragma once

#include <utility>

namespace hgm {

/// Radial eigenfunction in the variable s = e^{-alpha r}:
///
///   u(r) = N s^omega (1 - s)^phi_exp P_n^{(2 omega, 2 phi_exp - 1)}(1 - 2 s),
///
/// with P_n written as (2 omega + 1)_n / n! 2F1(-n, 2 omega + 2 phi_exp + n; 2 omega + 1; s).
/// The normalization is held as a logarithm because omega reaches the
/// thousands for molecular parameters and N itself overflows.
struct WavefunctionSpec
{
    double omega = 0.0;    ///< power of s as r -> infinity
    double phi_exp = 0.0;  ///< power of (1 - s) as r -> 0
    int n = 0;             ///< polynomial degree (node count)
    double alpha = 1.0;    ///< 1/A
    double log_norm = 0.0; ///< ln N

    double norm() const;

    /// u(r); throws InvalidParameter for r <= 0.
    double operator()(double r) const;

    /// ln|u(r)| envelope without the polynomial, for scaling purposes.
    double log_envelope(double r) const;

    /// Peak of the envelope s^omega (1 - s)^phi_exp, in r.
    double envelope_peak() const;

    /// Interval outside which the squared envelope is below e^{-margin} of its peak.
    std::pair<double, double> support(double margin = 200.0) const;
};

/// Throws NoBoundState unless omega > 0 and phi_exp > 1/2.
void require_normalizable(double omega, double phi_exp);

/// Sets log_norm so that the integral of u^2 over (0, inf) is one, using
/// adaptive Gauss-Kronrod quadrature in r. Returns the updated spec.
WavefunctionSpec normalize_by_quadrature(WavefunctionSpec spec);

/// ln of the closed-form constant sqrt(n! 2 omega alpha Gamma(2 omega + 2 phi + n + 1)
///   / (Gamma(2 omega + n + 1) Gamma(2 phi + n + 1))).
double log_closed_form_norm(double omega, double phi_exp, int n, double alpha);

/// Interior sign changes of u sampled on `samples` points across its support.
int count_nodes(const WavefunctionSpec& spec, int samples = 20000);

} // namespace hgm

#pragma once

#include <optional>

namespace hgm {

/// Coefficients of the reduced radial equation shared by every model
///
///   u'' + u'/s + [-(eps - eta + chi + phi) s^2 + (2 eps - beta - eta + chi) s
///                 - (eps - beta + gamma)] / (s^2 (1 - s)^2) u = 0,   s = e^{-alpha r}
///
/// (derivatives in s). The Schroedinger, Klein-Gordon and both Dirac limits
/// differ only in how these six numbers depend on the energy.
struct ReducedCoefficients
{
    double eps = 0.0;
    double beta = 0.0;
    double eta = 0.0;
    double chi = 0.0;
    double phi = 0.0;
    double gamma = 0.0;

    /// 1/4 + phi + gamma; the (1 - s) exponent is 1/2 + sqrt of this.
    double edge_radicand() const { return 0.25 + phi + gamma; }

    /// eps - beta + gamma; the s exponent squared.
    double leading_radicand() const { return eps - beta + gamma; }

    /// (N^2 - beta + eta - chi + gamma - phi) / N with N = n + 1/2 + sqrt(edge_radicand).
    /// Empty when the edge radicand is negative.
    std::optional<double> bracket(int n) const;

    /// beta - gamma + bracket^2 / 4: the value eps must take for level n.
    std::optional<double> quantized_eps(int n) const;

    /// eps - quantized_eps(n).
    std::optional<double> residual(int n) const;

    /// Leading exponent implied by the quantization condition, -bracket/2.
    /// A bound state needs this to be positive.
    std::optional<double> leading_exponent(int n) const;

    std::optional<double> edge_exponent() const;
};

} // namespace hgm

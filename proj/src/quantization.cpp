#include "hgm/quantization.hpp"

#include <cmath>

namespace hgm {

std::optional<double> ReducedCoefficients::bracket(int n) const
{
    const double rad = edge_radicand();
    if (!(rad >= 0.0)) return std::nullopt;
    const double N = n + 0.5 + std::sqrt(rad);
    return (N * N - beta + eta - chi + gamma - phi) / N;
}

std::optional<double> ReducedCoefficients::quantized_eps(int n) const
{
    const auto br = bracket(n);
    if (!br) return std::nullopt;
    return beta - gamma + 0.25 * *br * *br;
}

std::optional<double> ReducedCoefficients::residual(int n) const
{
    const auto q = quantized_eps(n);
    if (!q) return std::nullopt;
    return eps - *q;
}

std::optional<double> ReducedCoefficients::leading_exponent(int n) const
{
    const auto br = bracket(n);
    if (!br) return std::nullopt;
    return -0.5 * *br;
}

std::optional<double> ReducedCoefficients::edge_exponent() const
{
    const double rad = edge_radicand();
    if (!(rad >= 0.0)) return std::nullopt;
    return 0.5 + std::sqrt(rad);
}

} // namespace hgm

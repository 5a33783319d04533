#include "hgm/potential.hpp"

#include <cmath>
#include <string>

#include "hgm/error.hpp"

namespace hgm {

namespace {

void require_positive_r(double r)
{
    if (!(r > 0.0))
        throw InvalidParameter("radius must be positive, got " + std::to_string(r));
}

// 1/(e^{x} - 1) == s/(1 - s) with s = e^{-x}
double bose(double x)
{
    return 1.0 / std::expm1(x);
}

double morse_part(const PotentialParams& p, double r)
{
    const double t = 1.0 - p.q * bose(p.alpha * r);
    return p.De * t * t;
}

} // namespace

double q_of(double alpha, double re)
{
    if (!(alpha > 0.0)) throw InvalidParameter("alpha must be positive");
    if (!(re > 0.0)) throw InvalidParameter("re must be positive");
    return std::expm1(alpha * re);
}

PotentialParams make_potential(double a, double b, double De, double re, double alpha)
{
    if (!(De >= 0.0)) throw InvalidParameter("De must be non-negative");
    if (!std::isfinite(a) || !std::isfinite(b))
        throw InvalidParameter("a and b must be finite");
    PotentialParams p;
    p.a = a;
    p.b = b;
    p.De = De;
    p.re = re;
    p.alpha = alpha;
    p.q = q_of(alpha, re);
    return p;
}

double potential_exact(const PotentialParams& p, double r)
{
    require_positive_r(r);
    return (-p.a + p.b * std::exp(-p.alpha * r)) / r + morse_part(p, r);
}

double potential_approx(const PotentialParams& p, double r)
{
    require_positive_r(r);
    // alpha/(1 - s) and alpha*s/(1 - s)
    const double inv_r = -p.alpha / std::expm1(-p.alpha * r);
    const double screened = p.alpha * bose(p.alpha * r);
    return -p.a * inv_r + p.b * screened + morse_part(p, r);
}

double centrifugal_approx(double alpha, double r, double L)
{
    require_positive_r(r);
    if (L == 0.0) return 0.0;
    const double inv_r = -alpha / std::expm1(-alpha * r);
    return L * inv_r * inv_r;
}

double potential_approx_asymptote(const PotentialParams& p)
{
    return p.De - p.a * p.alpha;
}

std::vector<CurveRow> potential_curve(const PotentialParams& p, double r_min, double r_max,
                                      int samples)
{
    if (!(r_min > 0.0) || !(r_max > r_min))
        throw InvalidParameter("potential curve needs 0 < r_min < r_max");
    if (samples < 2) throw InvalidParameter("potential curve needs at least 2 samples");

    std::vector<CurveRow> rows;
    rows.reserve(static_cast<std::size_t>(samples));
    const double step = (r_max - r_min) / (samples - 1);
    for (int i = 0; i < samples; ++i) {
        const double r = (i == samples - 1) ? r_max : r_min + step * i;
        rows.push_back({r, potential_exact(p, r), potential_approx(p, r)});
    }
    return rows;
}

} // namespace hgm

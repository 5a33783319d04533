#include "hgm/specfun.hpp"

#include <cmath>
#include <string>

#include "hgm/error.hpp"

namespace hgm {

double ln_gamma(double x)
{
    if (!(x > 0.0))
        throw InvalidParameter("ln_gamma needs a positive argument, got " + std::to_string(x));
    return std::lgamma(x);
}

double pochhammer(double x, int n)
{
    if (n < 0) throw InvalidParameter("pochhammer needs n >= 0");
    double product = 1.0;
    for (int k = 0; k < n; ++k)
        product *= x + k;
    return product;
}

double hyp2f1_terminating(int n, double B, double C, double s)
{
    if (n < 0) throw InvalidParameter("hyp2f1_terminating needs n >= 0");
    for (int k = 0; k < n; ++k) {
        if (C + k == 0.0)
            throw InvalidParameter("hyp2f1_terminating: C is a non-positive integer in range");
    }
    // t_{k+1}/t_k = (k - n)(B + k) / ((C + k)(k + 1)) * s
    // The terms alternate and can exceed the sum by orders of magnitude when B
    // is large, so accumulate in extended precision.
    long double term = 1.0L;
    long double sum = 1.0L;
    for (int k = 0; k < n; ++k) {
        term *= static_cast<long double>(k - n) * (static_cast<long double>(B) + k)
                / ((static_cast<long double>(C) + k) * (k + 1.0L)) * static_cast<long double>(s);
        sum += term;
    }
    return static_cast<double>(sum);
}

double jacobi_poly(const JacobiParams& p, double x)
{
    if (p.n < 0) throw InvalidParameter("Jacobi degree must be non-negative");
    const double lead = pochhammer(p.theta + 1.0, p.n) / std::tgamma(p.n + 1.0);
    return lead * hyp2f1_terminating(p.n, p.theta + p.vartheta + p.n + 1.0, p.theta + 1.0,
                                     0.5 * (1.0 - x));
}

double jacobi_norm_integral(double x_exp, double y_exp, int n)
{
    if (!(x_exp > -1.0) || !(y_exp > -1.0))
        throw InvalidParameter("Jacobi norm integral needs exponents > -1");
    if (n < 0) throw InvalidParameter("Jacobi degree must be non-negative");
    // The ((1-p)/2)^x ((1+p)/2)^y weight is 2^{-(x+y)} times the usual one.
    const double log_ratio = ln_gamma(n + x_exp + 1.0) + ln_gamma(n + y_exp + 1.0)
                             - ln_gamma(n + x_exp + y_exp + 1.0) - ln_gamma(n + 1.0);
    return 2.0 / (2.0 * n + x_exp + y_exp + 1.0) * std::exp(log_ratio);
}

} // namespace hgm

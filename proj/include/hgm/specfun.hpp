#pragma once

namespace hgm {

/// Parameters of a Jacobi polynomial P_n^{(theta, vartheta)}.
struct JacobiParams
{
    double theta = 0.0;
    double vartheta = 0.0;
    int n = 0;
};

/// ln Gamma(x) for x > 0.
double ln_gamma(double x);

/// Rising factorial x (x+1) ... (x+n-1); 1 for n == 0.
double pochhammer(double x, int n);

/// 2F1(-n, B; C; s) summed term by term (n + 1 terms).
double hyp2f1_terminating(int n, double B, double C, double s);

/// P_n^{(theta, vartheta)}(x) via the terminating hypergeometric series.
double jacobi_poly(const JacobiParams& p, double x);

/// Integral over [-1, 1] of ((1-p)/2)^x ((1+p)/2)^y [P_n^{(x,y)}(p)]^2 dp,
/// from the standard Jacobi orthogonality relation.
double jacobi_norm_integral(double x_exp, double y_exp, int n);

} // namespace hgm

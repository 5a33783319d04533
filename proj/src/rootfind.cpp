#include "hgm/rootfind.hpp"

#include <cmath>

#include "hgm/error.hpp"

namespace hgm {

std::vector<RootBracket> scan_brackets(const PartialFunction& f, double lo, double hi, int points)
{
    if (!(lo < hi)) throw InvalidParameter("scan_brackets needs lo < hi");
    if (points < 2) throw InvalidParameter("scan_brackets needs at least 2 points");

    std::vector<RootBracket> out;
    const double step = (hi - lo) / (points - 1);
    double prev_x = lo;
    double prev_f = 0.0;
    bool have_prev = false;
    for (int i = 0; i < points; ++i) {
        const double x = (i == points - 1) ? hi : lo + step * i;
        const auto fx = f(x);
        if (!fx || !std::isfinite(*fx)) {
            have_prev = false;
            continue;
        }
        if (have_prev) {
            if (*fx == 0.0) {
                // an exact zero on a node: bracket it with the previous node
                if (prev_f != 0.0) out.push_back({prev_x, x, prev_f, *fx});
            } else if (prev_f * *fx < 0.0) {
                out.push_back({prev_x, x, prev_f, *fx});
            }
        }
        prev_x = x;
        prev_f = *fx;
        have_prev = true;
    }
    return out;
}

RootResult bisect(const PartialFunction& f, RootBracket b, double tol_abs, int max_iter)
{
    if (!(tol_abs > 0.0)) throw InvalidParameter("bisect needs tol_abs > 0");
    if (!(b.lo < b.hi) || !(b.f_lo * b.f_hi <= 0.0))
        throw InvalidParameter("bisect needs a certified bracket");
    if (b.f_lo == 0.0) return {b.lo, 0.0, 0};
    if (b.f_hi == 0.0) return {b.hi, 0.0, 0};

    int it = 0;
    while (b.hi - b.lo > tol_abs) {
        if (++it > max_iter) throw NonConvergence("bisection exceeded iteration limit");
        const double mid = 0.5 * (b.lo + b.hi);
        if (mid <= b.lo || mid >= b.hi) break; // interval at floating-point resolution
        const auto fm = f(mid);
        if (!fm || !std::isfinite(*fm))
            throw NonConvergence("function undefined inside a certified bracket");
        if (*fm == 0.0) return {mid, 0.0, it};
        if ((*fm < 0.0) == (b.f_lo < 0.0)) {
            b.lo = mid;
            b.f_lo = *fm;
        } else {
            b.hi = mid;
            b.f_hi = *fm;
        }
    }
    // report the endpoint with the smaller residual
    if (std::abs(b.f_lo) <= std::abs(b.f_hi)) return {b.lo, std::abs(b.f_lo), it};
    return {b.hi, std::abs(b.f_hi), it};
}

} // namespace hgm

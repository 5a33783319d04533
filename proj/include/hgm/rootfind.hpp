#pragma once

#include <functional>
#include <optional>
#include <vector>

namespace hgm {

/// A function that may be undefined at some points (e.g. a negative radicand).
using PartialFunction = std::function<std::optional<double>(double)>;

/// Interval with a certified sign change: lo < hi and f_lo * f_hi < 0.
struct RootBracket
{
    double lo;
    double hi;
    double f_lo;
    double f_hi;
};

struct RootResult
{
    double root;
    double f_root; ///< |f| at the returned point
    int iterations;
};

/// Samples f on `points` uniform nodes of [lo, hi] and returns every pair of
/// adjacent defined nodes with opposite signs, in ascending order. Undefined
/// nodes break adjacency.
std::vector<RootBracket> scan_brackets(const PartialFunction& f, double lo, double hi, int points);

/// Bisection down to hi - lo <= tol_abs. Throws NonConvergence past max_iter
/// and InvalidParameter for an uncertified bracket.
RootResult bisect(const PartialFunction& f, RootBracket b, double tol_abs, int max_iter = 200);

} // namespace hgm

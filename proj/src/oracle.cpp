#include "hgm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hgm/error.hpp"
#include "hgm/rootfind.hpp"

namespace hgm {

RadialGrid RadialGrid::make(double r_min, double r_max, int points)
{
    if (!(r_min > 0.0) || !(r_max > r_min))
        throw InvalidParameter("radial grid needs 0 < r_min < r_max");
    if (points < 100)
        throw GridTooCoarse("radial grid needs at least 100 points, got " + std::to_string(points));
    return {r_min, r_max, points};
}

// ---------------------------------------------------------------------------
// tridiagonal eigenproblem
// ---------------------------------------------------------------------------

namespace {

struct Tridiagonal
{
    std::vector<double> diag;
    double off = 0.0; // constant off-diagonal
};

Tridiagonal discretize(const std::function<double(double)>& U, double kinetic, const RadialGrid& g)
{
    const double h = g.spacing();
    const double c = kinetic / (h * h);
    Tridiagonal t;
    t.diag.resize(static_cast<std::size_t>(g.points - 2));
    for (int i = 1; i < g.points - 1; ++i)
        t.diag[static_cast<std::size_t>(i - 1)] = 2.0 * c + U(g.r_min + h * i);
    t.off = -c;
    return t;
}

// Number of eigenvalues strictly below x.
int sturm_count(const Tridiagonal& t, double x)
{
    const double off2 = t.off * t.off;
    const double tiny = std::numeric_limits<double>::min() * 1e10;
    int count = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < t.diag.size(); ++i) {
        q = t.diag[i] - x - (i == 0 ? 0.0 : off2 / q);
        if (q == 0.0) q = -tiny;
        if (q < 0.0) ++count;
    }
    return count;
}

double kth_eigenvalue(const Tridiagonal& t, int k, double lo, double hi)
{
    for (int it = 0; it < 400; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (sturm_count(t, mid) > k)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

std::vector<double> fd_radial_eigen(const std::function<double(double)>& effective_potential,
                                    double kinetic, const RadialGrid& g, int k)
{
    if (k < 1) throw InvalidParameter("at least one eigenvalue must be requested");
    if (k > g.points / 10)
        throw GridTooCoarse("grid of " + std::to_string(g.points) + " points cannot resolve "
                            + std::to_string(k) + " levels");
    if (!(kinetic > 0.0)) throw InvalidParameter("kinetic prefactor must be positive");

    const auto t = discretize(effective_potential, kinetic, g);
    // Gershgorin bounds
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (double d : t.diag) {
        lo = std::min(lo, d - 2.0 * std::abs(t.off));
        hi = std::max(hi, d + 2.0 * std::abs(t.off));
    }
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        out.push_back(kth_eigenvalue(t, i, lo, hi));
    }
    return out;
}

std::vector<double> fd_radial_eigenvector(const std::function<double(double)>& effective_potential,
                                          double kinetic, const RadialGrid& g, double eigenvalue)
{
    const auto t = discretize(effective_potential, kinetic, g);
    const std::size_t n = t.diag.size();
    // inverse iteration with a slightly shifted eigenvalue
    const double shift = eigenvalue + 1e-10 * std::max(1.0, std::abs(eigenvalue));
    std::vector<double> x(n, 1.0);
    std::vector<double> cp(n);
    std::vector<double> dp(n);
    for (int iter = 0; iter < 4; ++iter) {
        // Thomas algorithm for (T - shift) y = x
        double denom = t.diag[0] - shift;
        cp[0] = t.off / denom;
        dp[0] = x[0] / denom;
        for (std::size_t i = 1; i < n; ++i) {
            denom = t.diag[i] - shift - t.off * cp[i - 1];
            if (denom == 0.0) denom = 1e-300;
            cp[i] = t.off / denom;
            dp[i] = (x[i] - t.off * dp[i - 1]) / denom;
        }
        x[n - 1] = dp[n - 1];
        for (std::size_t i = n - 1; i-- > 0;)
            x[i] = dp[i] - cp[i] * x[i + 1];
        double norm = 0.0;
        for (double v : x)
            norm = std::max(norm, std::abs(v));
        for (double& v : x)
            v /= norm;
    }
    return x;
}

int count_sign_changes(const std::vector<double>& values)
{
    // ignore numerical dust far below the peak
    double peak = 0.0;
    for (double v : values)
        peak = std::max(peak, std::abs(v));
    const double floor = peak * 1e-10;
    int changes = 0;
    double prev = 0.0;
    for (double v : values) {
        if (std::abs(v) <= floor) continue;
        if (prev != 0.0 && (v < 0.0) != (prev < 0.0)) ++changes;
        prev = v;
    }
    return changes;
}

std::function<double(double)> nonrel_effective_potential(const PotentialParams& p,
                                                         const ParticleSpec& part, int l)
{
    const double barrier = part.kinetic() * l * (l + 1.0);
    return [p, barrier](double r) {
        return potential_approx(p, r) + centrifugal_approx(p.alpha, r, barrier);
    };
}

std::vector<double> fd_schrodinger_eigen(const PotentialParams& p, const ParticleSpec& part, int l,
                                         const RadialGrid& g, int k)
{
    if (l < 0) throw InvalidParameter("l must be non-negative");
    return fd_radial_eigen(nonrel_effective_potential(p, part, l), part.kinetic(), g, k);
}

RadialGrid default_grid(const PotentialParams& p, int points)
{
    return RadialGrid::make(1e-3, 40.0 / p.alpha, points);
}

namespace {

// [lo, hi]: classically allowed region below `ceiling` extended by `decay`
// WKB e-folds on both sides, restricted to the sampled range.
std::pair<double, double> allowed_with_tails(const std::vector<double>& r,
                                             const std::vector<double>& depth, double decay)
{
    // depth[i] > 0 where allowed; kappa^2 = -depth where forbidden
    std::size_t first = r.size();
    std::size_t last = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (depth[i] > 0.0) {
            first = std::min(first, i);
            last = std::max(last, i);
        }
    }
    if (first == r.size()) {
        const auto it = std::max_element(depth.begin(), depth.end());
        first = last = static_cast<std::size_t>(it - depth.begin());
    }
    double acc = 0.0;
    std::size_t hi = last;
    while (hi + 1 < r.size() && acc < decay) {
        acc += std::sqrt(std::max(0.0, -depth[hi + 1])) * (r[hi + 1] - r[hi]);
        ++hi;
    }
    acc = 0.0;
    std::size_t lo = first;
    while (lo > 0 && acc < decay) {
        acc += std::sqrt(std::max(0.0, -depth[lo - 1])) * (r[lo] - r[lo - 1]);
        --lo;
    }
    return {r[lo], r[hi]};
}

std::vector<double> geometric_samples(double lo, double hi, int count)
{
    std::vector<double> r(static_cast<std::size_t>(count));
    const double ratio = std::log(hi / lo) / (count - 1);
    for (int i = 0; i < count; ++i)
        r[static_cast<std::size_t>(i)] = lo * std::exp(ratio * i);
    r.back() = hi;
    return r;
}

} // namespace

RadialGrid fitted_grid(const std::function<double(double)>& effective_potential, double kinetic,
                       const RadialGrid& outer, int k)
{
    const auto r = geometric_samples(outer.r_min, outer.r_max, 8000);
    std::vector<double> U(r.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        U[i] = effective_potential(r[i]);
    const double u_min = *std::min_element(U.begin(), U.end());
    const double u_far = U.back();

    auto domain_for = [&](double ceiling) {
        std::vector<double> depth(r.size());
        for (std::size_t i = 0; i < r.size(); ++i)
            depth[i] = (ceiling - U[i]) / kinetic;
        return allowed_with_tails(r, depth, 30.0);
    };

    double ceiling = u_min + 0.05 * std::max(u_far - u_min, 1e-12);
    RadialGrid probe = outer;
    for (int iter = 0; iter < 40; ++iter) {
        const auto [lo, hi] = domain_for(ceiling);
        probe = RadialGrid::make(lo, std::max(hi, lo * (1.0 + 1e-6)), std::min(outer.points, 4001));
        const double top = fd_radial_eigen(effective_potential, kinetic, probe, k).back();
        const double wanted = top + 0.5 * (top - u_min);
        if (wanted <= ceiling) break;
        ceiling = wanted;
    }
    const auto [lo, hi] = domain_for(ceiling);
    return RadialGrid::make(lo, hi, outer.points);
}

Extrapolated richardson_extrapolate(double e_coarse, double e_fine, double ratio, int order)
{
    if (!(ratio > 1.0)) throw InvalidParameter("Richardson ratio must exceed 1");
    if (order < 1) throw InvalidParameter("Richardson order must be at least 1");
    const double factor = std::pow(ratio, order) - 1.0;
    return {e_coarse, e_fine, e_fine + (e_fine - e_coarse) / factor, std::abs(e_fine - e_coarse)};
}

std::vector<Extrapolated> fd_extrapolated(const std::function<double(double)>& effective_potential,
                                          double kinetic, const RadialGrid& g, int k)
{
    const auto coarse = fd_radial_eigen(effective_potential, kinetic, g, k);
    const RadialGrid fine_grid{g.r_min, g.r_max, 2 * g.points - 1};
    const auto fine = fd_radial_eigen(effective_potential, kinetic, fine_grid, k);
    std::vector<Extrapolated> out;
    for (int i = 0; i < k; ++i)
        out.push_back(richardson_extrapolate(coarse[static_cast<std::size_t>(i)],
                                             fine[static_cast<std::size_t>(i)], 2.0, 2));
    return out;
}

std::vector<Extrapolated> schrodinger_oracle(const PotentialParams& p, const ParticleSpec& part,
                                             int l, int k, int points)
{
    const auto U = nonrel_effective_potential(p, part, l);
    const auto grid = fitted_grid(U, part.kinetic(), default_grid(p, points), k);
    return fd_extrapolated(U, part.kinetic(), grid, k);
}

// ---------------------------------------------------------------------------
// shooting
// ---------------------------------------------------------------------------

double CoupledRadialEquation::operator()(double r, double energy) const
{
    return coupling(energy) * (reference(energy) - potential_approx(potential, r))
           - centrifugal_approx(potential.alpha, r, barrier);
}

CoupledRadialEquation nonrel_equation(const PotentialParams& p, const ParticleSpec& part, int l)
{
    const double K = 1.0 / part.kinetic();
    return {p, [K](double) { return K; }, [](double e) { return e; }, l * (l + 1.0)};
}

CoupledRadialEquation kg_equation(const PotentialParams& p, double mass, int dimension, int l,
                                  double hbar_c)
{
    const double h2 = hbar_c * hbar_c;
    const double lambda = (dimension + 2.0 * l - 1.0) * (dimension + 2.0 * l - 3.0) / 4.0;
    return {p, [mass, h2](double e) { return (e + mass) / h2; },
            [mass](double e) { return e - mass; }, lambda};
}

CoupledRadialEquation spin_equation(const PotentialParams& p, double mass, int kappa, double cs,
                                    double hbar_c)
{
    const double h2 = hbar_c * hbar_c;
    return {p, [mass, cs, h2](double e) { return (mass + e - cs) / h2; },
            [mass](double e) { return e - mass; }, kappa * (kappa + 1.0)};
}

CoupledRadialEquation pseudospin_equation(const PotentialParams& p, double mass, int kappa,
                                          double cps, double hbar_c)
{
    const double h2 = hbar_c * hbar_c;
    return {p, [mass, cps, h2](double e) { return -(mass - e + cps) / h2; },
            [mass](double e) { return mass + e; }, kappa * (kappa - 1.0)};
}

namespace {

struct Trace
{
    double before;
    double at;
    double after;
};

// Numerov for y'' = f(x) y on a uniform x mesh, from index `from` towards `to`,
// stopping one node past `stop`. Values are rescaled on growth; only the last
// three nodes around `stop` are returned.
Trace numerov_run(const std::vector<double>& f, double h, std::size_t from, int dir,
                  std::size_t stop, double y0, double y1)
{
    const double h12 = h * h / 12.0;
    std::vector<double> y(f.size(), 0.0);
    std::size_t i0 = from;
    std::size_t i1 = static_cast<std::size_t>(static_cast<long>(from) + dir);
    y[i0] = y0;
    y[i1] = y1;
    std::size_t prev = i0;
    std::size_t cur = i1;
    const std::size_t end = static_cast<std::size_t>(static_cast<long>(stop) + dir);
    while (cur != end) {
        const std::size_t next = static_cast<std::size_t>(static_cast<long>(cur) + dir);
        const double gp = 1.0 - h12 * f[prev];
        const double gc = 1.0 - h12 * f[cur];
        const double gn = 1.0 - h12 * f[next];
        y[next] = ((12.0 - 10.0 * gc) * y[cur] - gp * y[prev]) / gn;
        if (!std::isfinite(y[next])) throw NonConvergence("shooting overflow");
        if (std::abs(y[next]) > 1e150) {
            y[prev] *= 1e-150;
            y[cur] *= 1e-150;
            y[next] *= 1e-150;
        }
        prev = cur;
        cur = next;
    }
    return {y[stop - 1], y[stop], y[stop + 1]}; // ordered by increasing x
}

} // namespace

Mismatch shoot_mismatch(const RadialCoefficient& ode, double energy, const RadialGrid& g,
                        double r_match)
{
    if (r_match > 0.0 && !(r_match > g.r_min && r_match < g.r_max))
        throw InvalidParameter("match point must lie strictly inside the grid");
    const std::size_t n = static_cast<std::size_t>(g.points);
    const double x0 = std::log(g.r_min);
    const double h = (std::log(g.r_max) - x0) / (g.points - 1);

    // u = sqrt(r) y  =>  y'' = (1/4 - r^2 W) y in x = ln r
    std::vector<double> f(n);
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double r = std::exp(x0 + h * static_cast<double>(i));
        w[i] = ode(r, energy);
        f[i] = 0.25 - r * r * w[i];
    }

    std::size_t m = 0;
    if (r_match > 0.0) {
        m = static_cast<std::size_t>(std::lround((std::log(r_match) - x0) / h));
    } else {
        m = static_cast<std::size_t>(std::max_element(w.begin(), w.end()) - w.begin());
    }
    m = std::clamp<std::size_t>(m, 2, n - 3);

    // regular power law y ~ e^{k x} at the inner end
    const double k_in = std::sqrt(std::max(f[0], 0.0));
    const Trace left = numerov_run(f, h, 0, +1, m, 1.0, std::exp(k_in * h));
    const Trace right = numerov_run(f, h, n - 1, -1, m, 0.0, 1.0);

    const double dl = (left.after - left.before) / (2.0 * h);
    const double dr = (right.after - right.before) / (2.0 * h);
    const double nl = std::hypot(left.at, dl);
    const double nr = std::hypot(right.at, dr);

    Mismatch out;
    out.r_match = std::exp(x0 + h * static_cast<double>(m));
    out.wronskian = (dl * right.at - left.at * dr) / (nl * nr);
    // d/dr ln u = (1/2 + y'/y) / r
    out.log_derivative = (dl / left.at - dr / right.at) / out.r_match;
    return out;
}

RadialGrid shooting_grid(const RadialCoefficient& ode, double energy, double alpha, int points,
                         double r_floor)
{
    const double r_cap = 40.0 / alpha;
    const auto r = geometric_samples(r_floor, r_cap, 8000);
    std::vector<double> depth(r.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        depth[i] = ode(r[i], energy);
    const double hi = allowed_with_tails(r, depth, 40.0).second;
    return RadialGrid::make(r_floor, std::max(hi, 2.0 * r_floor), points);
}

bool shooting_brackets(const RadialCoefficient& ode, double energy, double window, double alpha,
                       int points)
{
    const auto g = shooting_grid(ode, energy, alpha, points);
    // same mesh and match point on both sides
    const double r_match = shoot_mismatch(ode, energy, g).r_match;
    const double below = shoot_mismatch(ode, energy - window, g, r_match).wronskian;
    const double above = shoot_mismatch(ode, energy + window, g, r_match).wronskian;
    return below * above < 0.0;
}

} // namespace hgm

namespace hgm {

std::optional<double> shooting_eigenvalue(const RadialCoefficient& ode, double energy,
                                          double window, double alpha, int points)
{
    const auto g = shooting_grid(ode, energy, alpha, points);
    const double r_match = shoot_mismatch(ode, energy, g).r_match;
    auto w = [&](double E) -> std::optional<double> {
        const double v = shoot_mismatch(ode, E, g, r_match).wronskian;
        return std::isfinite(v) ? std::optional<double>(v) : std::nullopt;
    };
    const auto lo = w(energy - window), hi = w(energy + window);
    if (!lo || !hi || *lo * *hi >= 0.0) return std::nullopt;
    const RootBracket b{energy - window, energy + window, *lo, *hi};
    return bisect(w, b, window * 1e-6).root;
}

} // namespace hgm

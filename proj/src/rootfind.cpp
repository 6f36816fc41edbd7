#include "rpr/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace rpr {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// Fixed irrational rotation of the starting circle.
constexpr double kStartAngle = 0.4 * std::numbers::sqrt2;

struct Eval {
    ComplexFloat p;
    ComplexFloat dp;
    double scale;  // sum |c_i| |z|^i
};

Eval eval_with_derivative(const std::vector<ComplexFloat>& c, ComplexFloat z)
{
    ComplexFloat p = 0.0, dp = 0.0;
    double scale = 0.0;
    const double az = std::abs(z);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        dp = dp * z + p;
        p = p * z + *it;
        scale = scale * az + std::abs(*it);
    }
    return {p, dp, scale};
}

bool is_finite(ComplexFloat z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void enforce_conjugate_pairs(std::vector<ComplexFloat>& roots)
{
    const std::size_t n = roots.size();
    std::vector<bool> done(n, false);
    for (std::size_t k = 0; k < n; ++k) {
        if (done[k]) continue;
        done[k] = true;
        const ComplexFloat target = std::conj(roots[k]);
        std::size_t best = n;
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < n; ++j) {
            if (done[j]) continue;
            double d = std::abs(roots[j] - target);
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        const double self_d = 2.0 * std::abs(roots[k].imag());
        if (best == n || self_d <= best_d) {
            roots[k] = {roots[k].real(), 0.0};
            continue;
        }
        ComplexFloat mid = 0.5 * (roots[k] + std::conj(roots[best]));
        if (mid.imag() < 0) mid = std::conj(mid);
        roots[k] = mid;
        roots[best] = std::conj(mid);
        done[best] = true;
    }
}

}  // namespace

double relative_residual(const FloatUniPoly& f, ComplexFloat z)
{
    Eval e = eval_with_derivative(f.coeffs(), z);
    if (e.scale == 0.0) return 0.0;
    return std::abs(e.p) / e.scale;
}

RootSet find_roots(const FloatUniPoly& f, const RootFindOptions& opts)
{
    if (f.degree() < 1) throw std::invalid_argument("find_roots: degree must be at least 1");
    for (const auto& c : f.coeffs())
        if (!is_finite(c)) throw std::invalid_argument("find_roots: non-finite coefficient");

    const bool real_coeffs =
        std::all_of(f.coeffs().begin(), f.coeffs().end(), [](ComplexFloat c) { return c.imag() == 0.0; });

    RootSet out;
    out.poly_degree = f.degree();

    // Exact zero roots are split off; the remaining cofactor has c_0 != 0.
    std::size_t zeros = 0;
    while (f[zeros] == ComplexFloat(0.0)) ++zeros;
    std::vector<ComplexFloat> c(f.coeffs().begin() + static_cast<std::ptrdiff_t>(zeros), f.coeffs().end());
    const ComplexFloat lead = c.back();
    for (auto& x : c) x /= lead;
    const int n = static_cast<int>(c.size()) - 1;

    std::vector<ComplexFloat> z(static_cast<std::size_t>(n));
    if (n > 0) {
        double bound = 0.0;
        for (int i = 0; i < n; ++i) bound = std::max(bound, std::abs(c[static_cast<std::size_t>(i)]));
        const double radius = 1.0 + bound;
        for (int k = 0; k < n; ++k)
            z[static_cast<std::size_t>(k)] =
                std::polar(radius, 2.0 * std::numbers::pi * k / n + kStartAngle);
    }

    std::vector<bool> converged(z.size(), false);
    int iter = 0;
    for (; iter < opts.max_iter; ++iter) {
        bool all = true;
        for (std::size_t k = 0; k < z.size(); ++k) {
            if (converged[k]) continue;
            Eval e = eval_with_derivative(c, z[k]);
            if (std::abs(e.p) <= 4.0 * n * kEps * e.scale) {
                converged[k] = true;
                continue;
            }
            ComplexFloat sum = 0.0;
            for (std::size_t j = 0; j < z.size(); ++j)
                if (j != k) sum += 1.0 / (z[k] - z[j]);
            ComplexFloat denom = e.dp / e.p - sum;
            ComplexFloat w = denom == ComplexFloat(0.0) ? ComplexFloat(kEps, kEps) * (1.0 + std::abs(z[k]))
                                                        : 1.0 / denom;
            if (!is_finite(w)) w = ComplexFloat(kEps, kEps) * (1.0 + std::abs(z[k]));
            z[k] -= w;
            if (std::abs(w) <= kEps * std::abs(z[k])) converged[k] = true;
            else all = false;
        }
        if (all && std::all_of(converged.begin(), converged.end(), [](bool b) { return b; })) {
            ++iter;
            break;
        }
    }
    out.iterations = iter;

    std::vector<int> cluster(z.size(), 1);
    for (std::size_t k = 0; k < z.size(); ++k)
        for (std::size_t j = 0; j < z.size(); ++j)
            if (j != k && std::abs(z[k] - z[j]) <= opts.cluster_tol) ++cluster[k];

    for (std::size_t k = 0; k < z.size(); ++k) {
        if (cluster[k] > 1) continue;
        for (int s = 0; s < opts.polish_steps; ++s) {
            Eval e = eval_with_derivative(c, z[k]);
            if (e.p == ComplexFloat(0.0) || e.dp == ComplexFloat(0.0)) break;
            ComplexFloat next = z[k] - e.p / e.dp;
            Eval en = eval_with_derivative(c, next);
            if (!is_finite(next) || std::abs(en.p) > std::abs(e.p)) break;
            z[k] = next;
        }
    }

    for (std::size_t k = 0; k < zeros; ++k) z.push_back(0.0);
    if (real_coeffs) enforce_conjugate_pairs(z);
    std::sort(z.begin(), z.end(), [](ComplexFloat a, ComplexFloat b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });

    out.roots = z;
    out.multiplicity.assign(z.size(), 1);
    out.residuals.reserve(z.size());
    double worst = 0.0;
    for (std::size_t k = 0; k < z.size(); ++k) {
        for (std::size_t j = 0; j < z.size(); ++j)
            if (j != k && std::abs(z[k] - z[j]) <= opts.cluster_tol) ++out.multiplicity[k];
        double r = relative_residual(f, z[k]);
        if (!std::isfinite(r)) r = std::numeric_limits<double>::infinity();
        out.residuals.push_back(r);
        worst = std::max(worst, r);
    }
    if (worst > opts.tol)
        throw RootFindError("find_roots: no convergence within " + std::to_string(opts.max_iter) +
                                " iterations (worst residual " + std::to_string(worst) + ")",
                            out);
    return out;
}

RootSet find_roots(const ExactUniPoly& f, const RootFindOptions& opts)
{
    return find_roots(to_float(f), opts);
}

}  // namespace rpr

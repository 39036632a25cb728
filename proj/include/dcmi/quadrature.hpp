#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "dcmi/errors.hpp"

namespace dcmi {

/// Adaptive-Simpson configuration. `breakpoints` lists interior points where
/// the integrand is allowed to jump; integration proceeds piecewise between
/// them. Each piece samples its endpoints nudged inward by a relative 1e-13
/// so step edges are always evaluated from the interior side.
struct QuadratureSpec {
    double lo = 0.0;
    double hi = 1.0;
    double rel_tol = 1e-9;
    double abs_floor = 1e-12;
    std::vector<double> breakpoints;
    int max_depth = 60;
};

namespace detail {

template <class F>
double simpson_recurse(F& f, double a, double b, double fa, double fm, double fb,
                       double whole, double eps, int depth, int max_depth, bool& ok) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth >= 2 && std::abs(delta) <= 15.0 * eps) {
        return left + right + delta / 15.0;
    }
    if (depth >= max_depth) {
        ok = false;
        return left + right;
    }
    return simpson_recurse(f, a, m, fa, flm, fm, left, 0.5 * eps, depth + 1, max_depth, ok)
         + simpson_recurse(f, m, b, fm, frm, fb, right, 0.5 * eps, depth + 1, max_depth, ok);
}

template <class F>
double simpson_piece(F& f, double a, double b, double eps, int max_depth, bool& ok) {
    const double w = b - a;
    if (!(w > 0.0)) return 0.0;
    const double nudge = w * 1e-13;
    const double fa = f(a + nudge);
    const double fb = f(b - nudge);
    const double fm = f(0.5 * (a + b));
    const double whole = w / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_recurse(f, a, b, fa, fm, fb, whole, eps, 0, max_depth, ok);
}

// Composite-Simpson magnitude probe; only used to scale the tolerance, so it
// needs to be the right order of magnitude, not accurate.
template <class F>
double rough_magnitude(F& f, double a, double b) {
    constexpr int kPanels = 32;
    const double w = b - a;
    const double h = w / kPanels;
    const double nudge = w * 1e-13;
    double sum = f(a + nudge) + f(b - nudge);
    for (int i = 1; i < kPanels; ++i) {
        sum += 2.0 * (1.0 + (i & 1)) * f(a + h * i);
    }
    return std::abs(sum * h / 3.0);
}

} // namespace detail

/// Integrate f over [spec.lo, spec.hi] piecewise between breakpoints.
/// Throws EstimationError if the requested tolerance is not reached.
template <class F>
double integrate(F&& f, const QuadratureSpec& spec) {
    if (!(spec.hi > spec.lo)) {
        throw EstimationError("quadrature: empty interval");
    }
    std::vector<double> edges;
    edges.push_back(spec.lo);
    for (double b : spec.breakpoints) {
        if (b > spec.lo && b < spec.hi) edges.push_back(b);
    }
    edges.push_back(spec.hi);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    // First pass: estimate the magnitude per piece to scale the tolerance.
    double rough = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        rough += detail::rough_magnitude(f, edges[i], edges[i + 1]);
    }
    const double eps_total = std::max(spec.abs_floor, spec.rel_tol * rough);
    const double eps_piece = eps_total / static_cast<double>(edges.size() - 1);

    bool ok = true;
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        total += detail::simpson_piece(f, edges[i], edges[i + 1], eps_piece,
                                       spec.max_depth, ok);
    }
    if (!ok) {
        throw EstimationError("quadrature: did not converge to requested tolerance");
    }
    return total;
}

} // namespace dcmi

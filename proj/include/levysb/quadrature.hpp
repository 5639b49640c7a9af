#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>

namespace levysb {

template <typename Value>
struct QuadResult {
    Value value{};
    double error = 0.0;
    bool converged = true;
    std::size_t evaluations = 0;
};

namespace quad_detail {

// 15-point Kronrod extension of 7-point Gauss on [-1, 1].
inline constexpr double kNodes[15] = {
    -0.991455371120813, -0.949107912342759, -0.864864423359769,
    -0.741531185599394, -0.586087235467691, -0.405845151377397,
    -0.207784955007898, 0.0,
    0.207784955007898,  0.405845151377397,  0.586087235467691,
    0.741531185599394,  0.864864423359769,  0.949107912342759,
    0.991455371120813};
inline constexpr double kWeights[15] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728,
    0.204432940075298, 0.190350578064785, 0.169004726639267,
    0.140653259715525, 0.104790010322250, 0.063092092629979,
    0.022935322010529};
inline constexpr double kGaussWeights[7] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469, 0.381830050505119, 0.279705391489277,
    0.129484966168870};

template <typename F>
auto gk15(F& f, double a, double b) {
    using Value = decltype(f(a));
    using std::abs;
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    Value kron{};
    Value gauss{};
    for (int i = 0; i < 15; ++i) {
        const Value fx = f(mid + half * kNodes[i]);
        kron += kWeights[i] * fx;
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * fx;
    }
    kron *= half;
    gauss *= half;
    return std::pair<Value, double>(kron, abs(kron - gauss));
}

}  // namespace quad_detail

/// Adaptive Gauss-Kronrod on [a,b]. Bisects until the local error estimate
/// drops below the (proportionally allocated) tolerance or depth/evaluation
/// budgets run out; the returned error is the accumulated estimate.
template <typename F>
auto integrate_adaptive(F&& f, double a, double b, double rel_tol = 1e-8,
                        double abs_tol = 1e-12, int max_depth = 48,
                        std::size_t max_intervals = 100000) {
    using Value = decltype(f(a));
    QuadResult<Value> out;
    std::size_t intervals = 0;
    auto go = [&](auto&& self, double lo, double hi, double budget,
                  int depth) -> std::pair<Value, double> {
        auto [v, e] = quad_detail::gk15(f, lo, hi);
        using std::abs;
        out.evaluations += 15;
        ++intervals;
        if (e <= budget || e <= rel_tol * abs(v)) return {v, e};
        if (depth >= max_depth || intervals >= max_intervals) {
            out.converged = false;
            return {v, e};
        }
        const double mid = 0.5 * (lo + hi);
        auto left = self(self, lo, mid, budget / 2.0, depth + 1);
        auto right = self(self, mid, hi, budget / 2.0, depth + 1);
        return {left.first + right.first, left.second + right.second};
    };
    auto [v, e] = go(go, a, b, std::max(abs_tol, 1e-300), 0);
    out.value = v;
    out.error = e;
    return out;
}

/// Fixed composite Gauss-Kronrod with uniform panels; for integrands with
/// Monte Carlo staircase noise that adaptive bisection would chase forever.
template <typename F>
auto integrate_panels(F&& f, double a, double b, std::size_t panels = 256) {
    using Value = decltype(f(a));
    QuadResult<Value> out;
    const double width = (b - a) / static_cast<double>(panels);
    for (std::size_t k = 0; k < panels; ++k) {
        auto [v, e] = quad_detail::gk15(f, a + k * width, a + (k + 1) * width);
        out.value += v;
        out.error += e;
        out.evaluations += 15;
    }
    return out;
}

}  // namespace levysb

#pragma once

#include "bohr/errors.hpp"

#include <algorithm>
#include <cmath>
#include <concepts>
#include <span>
#include <string>
#include <vector>

namespace bohr {

template <typename F>
concept ScalarIntegrand = requires(F f, double x) {
    { f(x) } -> std::convertible_to<double>;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;  ///< accumulated |S2 − S1| / 15 over accepted panels
    bool converged = true;
};

struct SimpsonOptions {
    double abs_tol = 1e-10;
    int max_depth = 40;
};

namespace detail {

template <ScalarIntegrand F>
void simpson_step(const F& f, double a, double b, double fa, double fm, double fb, double whole,
                  double tol, int depth, QuadratureResult& out) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol || depth <= 0 || !(b - a > 0.0)) {
        if (std::abs(delta) > 15.0 * tol) out.converged = false;
        out.value += left + right + delta / 15.0;
        out.error += std::abs(delta) / 15.0;
        return;
    }
    simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, out);
    simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, out);
}

}  // namespace detail

/// Adaptive Simpson with interval bisection and Richardson correction.
/// Does not throw; check `converged`.
template <ScalarIntegrand F>
QuadratureResult adaptive_simpson(const F& f, double a, double b, SimpsonOptions opt = {}) {
    QuadratureResult out;
    if (a == b) return out;
    const double sign = b > a ? 1.0 : -1.0;
    const double lo = std::min(a, b);
    const double hi = std::max(a, b);
    const double fa = f(lo);
    const double fb = f(hi);
    const double fm = f(0.5 * (lo + hi));
    const double whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
    detail::simpson_step(f, lo, hi, fa, fm, fb, whole, opt.abs_tol, opt.max_depth, out);
    out.value *= sign;
    return out;
}

/// Adaptive Simpson that throws QuadratureError when the tolerance is not met.
template <ScalarIntegrand F>
double integrate(const F& f, double a, double b, SimpsonOptions opt = {}) {
    const QuadratureResult q = adaptive_simpson(f, a, b, opt);
    if (!q.converged || !std::isfinite(q.value)) {
        throw QuadratureError("adaptive Simpson did not converge on [" + std::to_string(a) + ", " +
                                  std::to_string(b) + "]",
                              q.error);
    }
    return q.value;
}

struct Extrapolated {
    double value;
    double error;  ///< |last diagonal − previous diagonal|
};

/// Richardson extrapolation to h → 0 for samples taken at h_k = h_0 / 2^k
/// with an error expansion in integer powers of h.
inline Extrapolated richardson_halving(std::span<const double> samples) {
    if (samples.empty()) throw DomainError("richardson_halving needs samples");
    std::vector<double> prev(samples.begin(), samples.end());
    double last = prev.back();
    double before = prev.size() > 1 ? prev[prev.size() - 2] : last;
    for (std::size_t level = 1; prev.size() > 1; ++level) {
        const double factor = std::ldexp(1.0, static_cast<int>(level));
        std::vector<double> next(prev.size() - 1);
        for (std::size_t i = 0; i + 1 < prev.size(); ++i) {
            next[i] = (factor * prev[i + 1] - prev[i]) / (factor - 1.0);
        }
        before = last;
        last = next.back();
        prev = std::move(next);
    }
    return {last, std::abs(last - before)};
}

}  // namespace bohr

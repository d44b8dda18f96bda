#pragma once

#include "bohr/phi.hpp"
#include "bohr/series.hpp"

#include <functional>

namespace bohr {

/// A value with an error estimate; `extrapolated` marks boundary values
/// reached by Richardson extrapolation rather than direct quadrature.
struct Estimate {
    double value = 0.0;
    double error = 0.0;
    bool extrapolated = false;
};

/// Extremal functions of C(φ): K with 1 + zK''/K' = φ, K(0) = K'(0) − 1 = 0,
/// and H = zK'. Every series carries its own tail hint and validity radius.
struct ExtremalPair {
    TruncatedSeries kprime;    ///< K'
    TruncatedSeries k;         ///< K
    TruncatedSeries h;         ///< H = zK'
    TruncatedSeries m_k;       ///< M_K
    TruncatedSeries m_kprime;  ///< M_{K'}
    std::function<double(double)> closed_kprime;  ///< presets only, t ∈ [−1, 1)

    // Derived series consumed by the growth and radius functionals.
    TruncatedSeries kprime_second;      ///< K''
    TruncatedSeries weighted_kprime;    ///< r ↦ ∫_0^r t K'(t) dt
    TruncatedSeries weighted_m_kprime;  ///< r ↦ ∫_0^r t M_{K'}(t) dt
    TruncatedSeries area_t1;            ///< r ↦ ∫_0^r t K'(t)² dt
    TruncatedSeries area_t3;            ///< r ↦ ∫_0^r t³ K'(t)² dt
    TruncatedSeries conj_tc;            ///< T_c(r) = (1/r) ∫_0^r M_{K'} M_φ
    TruncatedSeries conj_t;             ///< T(r) = ∫_0^r T_c
    TruncatedSeries conj_t_weighted;    ///< r ↦ ∫_0^r t T_c(t) dt

    std::size_t order() const noexcept { return kprime.order(); }
    bool has_closed_form() const noexcept { return static_cast<bool>(closed_kprime); }
};

/// Target radius for the automatic order policy.
inline constexpr double kDefaultTargetRadius = 0.99;

/// Builds the pair at a fixed working order.
ExtremalPair build_extremal(const PhiSpec& phi, std::size_t order);

/// Builds the pair starting at kDefaultOrder and doubling (up to kMaxOrder)
/// until the K' tail estimate at `target_r` falls below kTailTolerance.
ExtremalPair build_extremal(const PhiSpec& phi, double target_r = kDefaultTargetRadius);

/// K'(t) for |t| < 1 from the series.
double eval_kprime(const ExtremalPair& pair, double t);

/// K'(−t) for t ∈ [0, 1]. Presets use the closed form; custom φ uses
/// exp(∫_0^t (φ(−u) − 1)/u du) by adaptive quadrature, extrapolated at t = 1.
Estimate eval_kprime_neg_detailed(const ExtremalPair& pair, const PhiSpec& phi, double t);
double eval_kprime_neg(const ExtremalPair& pair, const PhiSpec& phi, double t);

struct BoundaryQuantities {
    double k_neg1 = 0.0;            ///< K(−1) = −∫_0^1 K'(−t) dt
    double int_t_kprime_neg = 0.0;  ///< ∫_0^1 t K'(−t) dt
    double error = 0.0;
    bool extrapolated = false;
};

BoundaryQuantities boundary_quantities(const ExtremalPair& pair, const PhiSpec& phi);

/// |1 + t K''(t)/K'(t) − φ(t)| with K'' from term-wise differentiation.
double ode_residual(const ExtremalPair& pair, const PhiSpec& phi, double t);

}  // namespace bohr

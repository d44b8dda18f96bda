#pragma once

// Independent cross-checks. Nothing here reuses the evaluation paths it is
// meant to check: derivatives come from finite differences, majorants from
// literal summation.

#include "bohr/extremal.hpp"
#include "bohr/functionals.hpp"
#include "bohr/phi.hpp"
#include "bohr/series.hpp"

#include <cstddef>

namespace bohr::oracle {

/// Coefficients of a harmonic map f = h + conj(g) with g' = α z h'.
struct HarmonicSample {
    TruncatedSeries h_coeffs;  ///< a_0 = 0, a_1 = 1, a_n
    TruncatedSeries g_coeffs;  ///< b_0 = b_1 = 0, b_n
    AlphaParam alpha{0.0};
};

inline constexpr double kFiniteDifferenceStep = 1e-4;

/// |1 + t K''(t)/K'(t) − φ(t)| with K'' from central differences of the K' series.
double ode_residual_fd(const ExtremalPair& pair, const PhiSpec& phi, double t,
                       double step = kFiniteDifferenceStep);

/// Σ_{n<terms} |c_n| r^n, summed left to right.
double brute_majorant_sum(const TruncatedSeries& s, double r, std::size_t terms);

/// M_{f(c·)}(r) ≤ M_f(r) for the subordinate g(z) = f(cz), r ≤ 1/3.
bool check_subordination_majorant(const TruncatedSeries& f, double c, double r);

/// f_α = K + conj(g_α) with b_n = |α| c_{n−2}/n, c_k the K' coefficients.
HarmonicSample sample_extremal_harmonic(const PhiSpec& phi, AlphaParam alpha, std::size_t order);

/// r + Σ_{n≥2} (|a_n| + |b_n|) r^n by literal summation.
double harmonic_majorant(const HarmonicSample& sample, double r);

/// Checks n·b_n = |α|(n−1)·a_{n−1} for n ≥ 2, the coefficient form of g' = α z h'.
bool satisfies_dilation_relation(const HarmonicSample& sample, double tol = 1e-12);

}  // namespace bohr::oracle

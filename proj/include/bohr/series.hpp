#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace bohr {

/// Coefficients whose magnitude exceeds this are treated as overflow.
inline constexpr double kOverflowCeiling = 1e300;

/// Tail estimates at or below this are considered negligible.
inline constexpr double kTailTolerance = 1e-12;

inline constexpr std::size_t kDefaultOrder = 256;
inline constexpr std::size_t kMaxOrder = 4096;

/// Truncated real power series c_0 + c_1 z + ... + c_N z^N.
///
/// An optional tail hint bounds |sum_{n>N} c_n r^n| for |r| <= r_max. The
/// hint is a heuristic (geometric extrapolation of the last coefficients), which
/// is adequate for the slowly varying coefficient sequences handled here.
class TruncatedSeries {
public:
    TruncatedSeries() : coeffs_{0.0} {}
    explicit TruncatedSeries(std::vector<double> coeffs);
    TruncatedSeries(std::vector<double> coeffs, double tail_hint, double r_max);

    /// The series sum_{n=0}^{N} z^n.
    static TruncatedSeries geometric(std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    std::span<const double> coeffs() const noexcept { return coeffs_; }
    double operator[](std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : 0.0; }

    std::optional<double> tail_hint() const noexcept { return tail_hint_; }
    double r_max() const noexcept { return r_max_; }
    /// Set when an operation discarded the tail hint of its inputs.
    bool tail_dropped() const noexcept { return tail_dropped_; }

    /// Copy with a fresh tail hint from the last-coefficient heuristic.
    /// r_max becomes the largest radius (capped at `cap`) where the estimate
    /// stays below kTailTolerance.
    TruncatedSeries with_tail_estimate(double cap = 0.999) const;

    /// Copy truncated or zero-padded to `order`.
    TruncatedSeries resized(std::size_t order) const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    friend TruncatedSeries mark_tail_dropped(TruncatedSeries s);

    std::vector<double> coeffs_;
    std::optional<double> tail_hint_;
    double r_max_ = 1.0;
    bool tail_dropped_ = false;
};

struct SeriesValue {
    double value;
    double error_bound;  ///< tail estimate at |r|; 0 when no hint is attached
};

/// Tail heuristic |c|·|r|^N / (1 − |r|) using the larger of the last two coefficients.
double tail_estimate(const TruncatedSeries& a, double r);

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scale(const TruncatedSeries& a, double factor);

/// Cauchy product truncated to the common order; the tail hint is dropped.
TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b);

/// r ↦ ∫_0^r a(t) dt.
TruncatedSeries integrate_from_zero(const TruncatedSeries& a);

/// r ↦ ∫_0^r t·a(t) dt.
TruncatedSeries integrate_weighted_t(const TruncatedSeries& a);

/// r ↦ ∫_0^r t^p·a(t) dt.
TruncatedSeries integrate_weighted_power(const TruncatedSeries& a, unsigned p);

/// Term-wise derivative; the order drops by one (minimum 0).
TruncatedSeries derivative(const TruncatedSeries& a);

/// Multiply by z^k.
TruncatedSeries shift_up(const TruncatedSeries& a, std::size_t k);

/// Absolute values of the coefficients.
TruncatedSeries majorant(const TruncatedSeries& a);

/// Horner evaluation. Rejects |r| > r_max when a tail hint is attached and
/// |r| >= 1 otherwise.
double eval(const TruncatedSeries& a, double r);
SeriesValue eval_with_bound(const TruncatedSeries& a, double r);

/// Coefficients of K' from 1 + zK''/K' = φ, via (log K')' = (φ − 1)/z:
/// c_0 = 1, c_n = (1/n) Σ_{m=1}^{n} B_m c_{n−m}.
TruncatedSeries solve_kprime_recurrence(const TruncatedSeries& phi_coeffs, std::size_t order);

}  // namespace bohr

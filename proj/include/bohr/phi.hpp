#pragma once

#include "bohr/series.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace bohr {

enum class PhiKind { janowski, poly43, custom };

/// How far the Ma-Minda conditions were checked.
enum class Validation {
    certified,  ///< preset, conditions known analytically
    partial,    ///< custom series, sampled checks only
};

/// A Ma-Minda function φ(z) = 1 + Σ B_n z^n with real coefficients.
///
/// Presets carry a closed-form evaluator on (−1, 1]; custom inputs are
/// polynomials given by their coefficient list.
class PhiSpec {
public:
    PhiKind kind() const noexcept { return kind_; }
    /// Coefficients B_0..B_N at the default working order.
    const TruncatedSeries& series() const noexcept { return series_; }
    /// Coefficients B_0..B_order.
    TruncatedSeries series_at(std::size_t order) const;
    std::optional<double> beta() const noexcept { return beta_; }
    bool has_closed_form() const noexcept { return static_cast<bool>(closed_eval_); }
    double closed_eval(double t) const;
    Validation validation() const noexcept { return validation_; }
    /// Sampling warnings and alias notes collected at construction.
    const std::vector<std::string>& notes() const noexcept { return notes_; }
    /// True when every B_n ≥ 0, so M_φ = φ on [0, 1).
    bool nonnegative_coefficients() const;
    /// Short human-readable description, e.g. "janowski(beta=0.5)".
    std::string describe() const;

    friend PhiSpec make_janowski(double beta);
    friend PhiSpec make_poly43();
    friend PhiSpec make_custom(const TruncatedSeries& coeffs);
    friend PhiSpec make_from_psi(const TruncatedSeries& coeffs);
    friend PhiSpec make_unchecked(const TruncatedSeries& coeffs);

private:
    PhiKind kind_ = PhiKind::custom;
    TruncatedSeries series_;
    std::optional<double> beta_;
    std::function<double(double)> closed_eval_;
    Validation validation_ = Validation::partial;
    std::vector<std::string> notes_;
};

/// φ(z) = (1 + (1 − 2β)z)/(1 − z), 0 ≤ β < 1.
PhiSpec make_janowski(double beta);

/// φ(z) = 1 + 4z/3 + 2z²/3.
PhiSpec make_poly43();

/// Polynomial φ from its coefficients; requires B_0 = 1 and B_1 > 0.
/// Warns (in notes) when sampled Re φ ≤ 0 on |z| = 0.95.
PhiSpec make_custom(const TruncatedSeries& coeffs);

/// Accepts a non-Ma-Minda ψ (ψ'(0) < 0) by reflecting z → −z, which leaves
/// the Bohr radius of the harmonic class unchanged. Coefficients with B_1 > 0
/// are passed to make_custom unchanged.
PhiSpec make_from_psi(const TruncatedSeries& coeffs);

/// Test fixture constructor without the B_1 > 0 check (e.g. φ ≡ 1).
PhiSpec make_unchecked(const TruncatedSeries& coeffs);

/// φ(t) via the closed form when available, else series evaluation.
/// Presets accept t ∈ [−1, 1); custom polynomials accept |t| ≤ 1.
double eval_phi(const PhiSpec& phi, double t);

/// Parses a comma-separated coefficient list ("1, 4/3" is not accepted; reals only).
TruncatedSeries parse_coefficient_list(const std::string& text);

/// Reads one real per line, first entry = B_0. Blank lines and '#' comments are skipped.
TruncatedSeries read_coefficient_file(const std::string& path);

}  // namespace bohr

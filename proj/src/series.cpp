#include "bohr/series.hpp"

#include "bohr/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace bohr {

namespace {

void validate(const std::vector<double>& coeffs) {
    if (coeffs.empty()) {
        throw DomainError("series needs at least one coefficient");
    }
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        const double c = coeffs[n];
        if (!std::isfinite(c) || std::abs(c) > kOverflowCeiling) {
            throw SeriesOverflow("series coefficient " + std::to_string(n) +
                                 " is not finite or exceeds 1e300");
        }
    }
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    validate(coeffs_);
}

TruncatedSeries::TruncatedSeries(std::vector<double> coeffs, double tail_hint, double r_max)
    : coeffs_(std::move(coeffs)), tail_hint_(tail_hint), r_max_(r_max) {
    validate(coeffs_);
    if (!(tail_hint >= 0.0) || !(r_max > 0.0 && r_max <= 1.0)) {
        throw DomainError("tail hint must be nonnegative with r_max in (0, 1]");
    }
}

TruncatedSeries TruncatedSeries::geometric(std::size_t order) {
    return TruncatedSeries(std::vector<double>(order + 1, 1.0));
}

TruncatedSeries mark_tail_dropped(TruncatedSeries s) {
    s.tail_dropped_ = true;
    return s;
}

double tail_estimate(const TruncatedSeries& a, double r) {
    const std::size_t n = a.order();
    double last = std::abs(a[n]);
    if (n > 0) last = std::max(last, std::abs(a[n - 1]));
    if (last == 0.0) return 0.0;
    const double x = std::abs(r);
    if (x >= 1.0) return std::numeric_limits<double>::infinity();
    return last * std::pow(x, static_cast<double>(n)) / (1.0 - x);
}

TruncatedSeries TruncatedSeries::with_tail_estimate(double cap) const {
    const std::size_t n = order();
    const bool vanishing_tail = (*this)[n] == 0.0 && (n == 0 || (*this)[n - 1] == 0.0);
    if (vanishing_tail) {
        return TruncatedSeries(coeffs_, 0.0, 1.0);
    }
    double r_max = cap;
    if (tail_estimate(*this, cap) > kTailTolerance) {
        double lo = 0.0, hi = cap;
        for (int it = 0; it < 80; ++it) {
            const double mid = 0.5 * (lo + hi);
            (tail_estimate(*this, mid) <= kTailTolerance ? lo : hi) = mid;
        }
        r_max = std::max(lo, 1e-6);
    }
    return TruncatedSeries(coeffs_, tail_estimate(*this, r_max), r_max);
}

TruncatedSeries TruncatedSeries::resized(std::size_t order) const {
    std::vector<double> c(order + 1, 0.0);
    std::copy_n(coeffs_.begin(), std::min(coeffs_.size(), order + 1), c.begin());
    return TruncatedSeries(std::move(c));
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::max(a.order(), b.order());
    std::vector<double> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) c[i] = a[i] + b[i];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries scale(const TruncatedSeries& a, double factor) {
    std::vector<double> c(a.coeffs().begin(), a.coeffs().end());
    for (double& x : c) x *= factor;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<double> c(n + 1, 0.0);
    const auto ac = a.coeffs();
    const auto bc = b.coeffs();
    for (std::size_t i = 0; i <= n; ++i) {
        if (ac[i] == 0.0) continue;
        for (std::size_t j = 0; i + j <= n; ++j) c[i + j] += ac[i] * bc[j];
    }
    TruncatedSeries out(std::move(c));
    if (a.tail_hint() || b.tail_hint()) return mark_tail_dropped(std::move(out));
    return out;
}

TruncatedSeries integrate_weighted_power(const TruncatedSeries& a, unsigned p) {
    const auto ac = a.coeffs();
    std::vector<double> c(ac.size() + p + 1, 0.0);
    for (std::size_t n = 0; n < ac.size(); ++n) {
        c[n + p + 1] = ac[n] / static_cast<double>(n + p + 1);
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries integrate_from_zero(const TruncatedSeries& a) { return integrate_weighted_power(a, 0); }

TruncatedSeries integrate_weighted_t(const TruncatedSeries& a) { return integrate_weighted_power(a, 1); }

TruncatedSeries derivative(const TruncatedSeries& a) {
    const auto ac = a.coeffs();
    if (ac.size() == 1) return TruncatedSeries();
    std::vector<double> c(ac.size() - 1);
    for (std::size_t n = 1; n < ac.size(); ++n) c[n - 1] = static_cast<double>(n) * ac[n];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries shift_up(const TruncatedSeries& a, std::size_t k) {
    std::vector<double> c(a.order() + 1 + k, 0.0);
    std::copy(a.coeffs().begin(), a.coeffs().end(), c.begin() + static_cast<std::ptrdiff_t>(k));
    return TruncatedSeries(std::move(c));
}

TruncatedSeries majorant(const TruncatedSeries& a) {
    std::vector<double> c(a.coeffs().begin(), a.coeffs().end());
    for (double& x : c) x = std::abs(x);
    if (a.tail_hint()) return TruncatedSeries(std::move(c), *a.tail_hint(), a.r_max());
    return TruncatedSeries(std::move(c));
}

SeriesValue eval_with_bound(const TruncatedSeries& a, double r) {
    if (!std::isfinite(r)) throw DomainError("series evaluation point is not finite");
    if (a.tail_hint()) {
        if (std::abs(r) > a.r_max()) {
            throw DomainError("series evaluated at |r| = " + std::to_string(std::abs(r)) +
                              " beyond its validity radius " + std::to_string(a.r_max()));
        }
    } else if (std::abs(r) >= 1.0 && a.order() > 0) {
        throw DomainError("series without tail hint evaluated at |r| >= 1");
    }
    const auto c = a.coeffs();
    double acc = 0.0;
    for (std::size_t n = c.size(); n-- > 0;) acc = acc * r + c[n];
    const double err = a.tail_hint() ? std::min(tail_estimate(a, r), *a.tail_hint()) : 0.0;
    return {acc, err};
}

double eval(const TruncatedSeries& a, double r) { return eval_with_bound(a, r).value; }

TruncatedSeries solve_kprime_recurrence(const TruncatedSeries& phi_coeffs, std::size_t order) {
    if (phi_coeffs[0] != 1.0) {
        throw DomainError("phi must satisfy phi(0) = 1 (B_0 = 1)");
    }
    // Nonzero B_m only; polynomial φ makes this O(N·deg).
    std::vector<std::pair<std::size_t, double>> b;
    for (std::size_t m = 1; m <= std::min(order, phi_coeffs.order()); ++m) {
        if (phi_coeffs[m] != 0.0) b.emplace_back(m, phi_coeffs[m]);
    }
    std::vector<double> c(order + 1, 0.0);
    c[0] = 1.0;
    for (std::size_t n = 1; n <= order; ++n) {
        double acc = 0.0;
        for (const auto& [m, bm] : b) {
            if (m > n) break;
            acc += bm * c[n - m];
        }
        c[n] = acc / static_cast<double>(n);
        if (!std::isfinite(c[n]) || std::abs(c[n]) > kOverflowCeiling) {
            throw SeriesOverflow("K' recurrence overflowed at order " + std::to_string(n));
        }
    }
    return TruncatedSeries(std::move(c));
}

}  // namespace bohr

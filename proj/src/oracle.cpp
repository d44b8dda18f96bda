#include "bohr/oracle.hpp"

#include "bohr/errors.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace bohr::oracle {

double ode_residual_fd(const ExtremalPair& pair, const PhiSpec& phi, double t, double step) {
    if (std::abs(t) > 0.8) throw DomainError("ode_residual_fd needs |t| <= 0.8");
    if (!(step >= 1e-6 && step <= 1e-3)) throw DomainError("finite-difference step must lie in [1e-6, 1e-3]");
    const double kp = eval(pair.kprime, t);
    const double kpp = (eval(pair.kprime, t + step) - eval(pair.kprime, t - step)) / (2.0 * step);
    return std::abs(1.0 + t * kpp / kp - eval_phi(phi, t));
}

double brute_majorant_sum(const TruncatedSeries& s, double r, std::size_t terms) {
    if (terms > s.order() + 1) throw DomainError("brute_majorant_sum: more terms than coefficients");
    double sum = 0.0;
    double power = 1.0;
    for (std::size_t n = 0; n < terms; ++n) {
        sum += std::abs(s[n]) * power;
        power *= r;
    }
    return sum;
}

bool check_subordination_majorant(const TruncatedSeries& f, double c, double r) {
    if (!(c > 0.0 && c < 1.0)) throw DomainError("subordination scale c must lie in (0, 1)");
    if (!(r >= 0.0 && r <= 1.0 / 3.0)) throw DomainError("subordination check needs r <= 1/3");
    std::vector<double> g(f.order() + 1);
    double cn = 1.0;
    for (std::size_t n = 0; n <= f.order(); ++n) {
        g[n] = f[n] * cn;
        cn *= c;
    }
    const std::size_t terms = f.order() + 1;
    return brute_majorant_sum(TruncatedSeries(std::move(g)), r, terms) <= brute_majorant_sum(f, r, terms);
}

HarmonicSample sample_extremal_harmonic(const PhiSpec& phi, AlphaParam alpha, std::size_t order) {
    if (order < 2) throw DomainError("harmonic sample needs order >= 2");
    const TruncatedSeries kp = solve_kprime_recurrence(phi.series_at(order), order);
    std::vector<double> a(order + 1, 0.0), b(order + 1, 0.0);
    for (std::size_t n = 1; n <= order; ++n) a[n] = kp[n - 1] / static_cast<double>(n);
    for (std::size_t n = 2; n <= order; ++n) b[n] = alpha.abs() * kp[n - 2] / static_cast<double>(n);
    return {TruncatedSeries(std::move(a)), TruncatedSeries(std::move(b)), alpha};
}

double harmonic_majorant(const HarmonicSample& sample, double r) {
    const std::size_t terms = std::max(sample.h_coeffs.order(), sample.g_coeffs.order()) + 1;
    double sum = 0.0;
    double power = 1.0;
    for (std::size_t n = 0; n < terms; ++n) {
        sum += (std::abs(sample.h_coeffs[n]) + std::abs(sample.g_coeffs[n])) * power;
        power *= r;
    }
    return sum;
}

bool satisfies_dilation_relation(const HarmonicSample& sample, double tol) {
    const std::size_t n_max = std::min(sample.h_coeffs.order() + 1, sample.g_coeffs.order());
    for (std::size_t n = 2; n <= n_max; ++n) {
        const double lhs = static_cast<double>(n) * sample.g_coeffs[n];
        const double rhs = sample.alpha.abs() * static_cast<double>(n - 1) * sample.h_coeffs[n - 1];
        if (std::abs(lhs - rhs) > tol * std::max(1.0, std::abs(rhs))) return false;
    }
    return true;
}

}  // namespace bohr::oracle

#include "bohr/extremal.hpp"

#include "bohr/errors.hpp"
#include "bohr/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace bohr {

namespace {

constexpr double kBoundaryTol = 1e-10;
constexpr int kFirstExtrapolationLevel = 4;
constexpr int kLastExtrapolationLevel = 12;

std::function<double(double)> closed_kprime_for(const PhiSpec& phi) {
    switch (phi.kind()) {
        case PhiKind::janowski: {
            const double expo = -(2.0 - 2.0 * *phi.beta());
            return [expo](double t) { return std::pow(1.0 - t, expo); };
        }
        case PhiKind::poly43:
            return [](double t) { return std::exp(4.0 * t / 3.0 + t * t / 3.0); };
        case PhiKind::custom:
            break;
    }
    return {};
}

/// u ↦ (φ(u) − 1)/u as an exact polynomial (custom φ is finite).
TruncatedSeries log_derivative_quotient(const PhiSpec& phi) {
    const auto b = phi.series().coeffs();
    std::vector<double> q(b.size() > 1 ? b.size() - 1 : 1, 0.0);
    for (std::size_t n = 1; n < b.size(); ++n) q[n - 1] = b[n];
    return TruncatedSeries(std::move(q), 0.0, 1.0);
}

double custom_kprime_neg(const TruncatedSeries& quotient, double t) {
    // (φ(−u) − 1)/u = −q(−u)
    const double log_kp = -integrate([&](double u) { return eval(quotient, -u); }, 0.0, t,
                                     {.abs_tol = 1e-13, .max_depth = 40});
    return std::exp(log_kp);
}

}  // namespace

ExtremalPair build_extremal(const PhiSpec& phi, std::size_t order) {
    ExtremalPair p;
    const TruncatedSeries kp = solve_kprime_recurrence(phi.series_at(order), order);
    p.kprime = kp.with_tail_estimate();
    p.k = integrate_from_zero(kp).with_tail_estimate();
    p.h = shift_up(kp, 1).with_tail_estimate();
    p.m_kprime = majorant(kp).with_tail_estimate();
    p.m_k = majorant(integrate_from_zero(kp)).with_tail_estimate();
    p.closed_kprime = closed_kprime_for(phi);

    p.kprime_second = derivative(kp).with_tail_estimate();
    p.weighted_kprime = integrate_weighted_t(kp).with_tail_estimate();
    p.weighted_m_kprime = integrate_weighted_t(majorant(kp)).with_tail_estimate();

    const TruncatedSeries sq = multiply(kp, kp);
    p.area_t1 = integrate_weighted_power(sq, 1).with_tail_estimate();
    p.area_t3 = integrate_weighted_power(sq, 3).with_tail_estimate();

    // p_n of M_{K'}·M_φ; T_c = Σ p_n r^n/(n+1), T = Σ p_n r^{n+1}/(n+1)²,
    // ∫ t T_c = Σ p_n r^{n+2}/((n+1)(n+2)).
    const TruncatedSeries prod = multiply(majorant(kp), majorant(phi.series_at(order)));
    const auto pc = prod.coeffs();
    std::vector<double> tc(pc.size()), tt(pc.size() + 1, 0.0), tw(pc.size() + 2, 0.0);
    for (std::size_t n = 0; n < pc.size(); ++n) {
        const double n1 = static_cast<double>(n + 1);
        tc[n] = pc[n] / n1;
        tt[n + 1] = pc[n] / (n1 * n1);
        tw[n + 2] = pc[n] / (n1 * (n1 + 1.0));
    }
    p.conj_tc = TruncatedSeries(std::move(tc)).with_tail_estimate();
    p.conj_t = TruncatedSeries(std::move(tt)).with_tail_estimate();
    p.conj_t_weighted = TruncatedSeries(std::move(tw)).with_tail_estimate();
    return p;
}

ExtremalPair build_extremal(const PhiSpec& phi, double target_r) {
    if (!(target_r > 0.0 && target_r < 1.0)) throw DomainError("target radius must lie in (0, 1)");
    std::size_t order = kDefaultOrder;
    for (;;) {
        // Only K' drives the policy; derived series report their own r_max.
        const TruncatedSeries kp = solve_kprime_recurrence(phi.series_at(order), order);
        if (tail_estimate(kp, target_r) <= kTailTolerance || order >= kMaxOrder) break;
        order *= 2;
    }
    return build_extremal(phi, order);
}

double eval_kprime(const ExtremalPair& pair, double t) { return eval(pair.kprime, t); }

Estimate eval_kprime_neg_detailed(const ExtremalPair& pair, const PhiSpec& phi, double t) {
    if (!(t >= 0.0 && t <= 1.0)) throw DomainError("K'(-t) needs t in [0, 1]");
    if (t == 0.0) return {1.0, 0.0, false};
    if (pair.has_closed_form()) return {pair.closed_kprime(-t), 0.0, false};

    const TruncatedSeries q = log_derivative_quotient(phi);
    if (t < 1.0) return {custom_kprime_neg(q, t), 0.0, false};

    std::vector<double> samples;
    for (int k = kFirstExtrapolationLevel; k <= kLastExtrapolationLevel; ++k) {
        samples.push_back(custom_kprime_neg(q, 1.0 - std::ldexp(1.0, -k)));
    }
    const Extrapolated ex = richardson_halving(samples);
    return {ex.value, ex.error, true};
}

double eval_kprime_neg(const ExtremalPair& pair, const PhiSpec& phi, double t) {
    return eval_kprime_neg_detailed(pair, phi, t).value;
}

BoundaryQuantities boundary_quantities(const ExtremalPair& pair, const PhiSpec& phi) {
    BoundaryQuantities out;
    if (pair.has_closed_form()) {
        const auto& kp = pair.closed_kprime;
        out.k_neg1 = -integrate([&](double t) { return kp(-t); }, 0.0, 1.0, {.abs_tol = kBoundaryTol});
        out.int_t_kprime_neg =
            integrate([&](double t) { return t * kp(-t); }, 0.0, 1.0, {.abs_tol = kBoundaryTol});
        return out;
    }

    const TruncatedSeries q = log_derivative_quotient(phi);
    const auto kp_neg = [&](double t) { return t == 0.0 ? 1.0 : custom_kprime_neg(q, t); };
    std::vector<double> plain, weighted;
    double acc_plain = 0.0, acc_weighted = 0.0, prev = 0.0;
    for (int k = 1; k <= kLastExtrapolationLevel; ++k) {
        const double t_k = 1.0 - std::ldexp(1.0, -k);
        acc_plain += integrate(kp_neg, prev, t_k, {.abs_tol = kBoundaryTol});
        acc_weighted += integrate([&](double t) { return t * kp_neg(t); }, prev, t_k,
                                  {.abs_tol = kBoundaryTol});
        prev = t_k;
        if (k >= kFirstExtrapolationLevel) {
            plain.push_back(acc_plain);
            weighted.push_back(acc_weighted);
        }
    }
    const Extrapolated ep = richardson_halving(plain);
    const Extrapolated ew = richardson_halving(weighted);
    out.k_neg1 = -ep.value;
    out.int_t_kprime_neg = ew.value;
    // the samples themselves carry quadrature error of order kBoundaryTol per level
    out.error = std::max({ep.error, ew.error, kLastExtrapolationLevel * kBoundaryTol});
    out.extrapolated = true;
    return out;
}

double ode_residual(const ExtremalPair& pair, const PhiSpec& phi, double t) {
    const double kp = eval(pair.kprime, t);
    const double kpp = eval(pair.kprime_second, t);
    return std::abs(1.0 + t * kpp / kp - eval_phi(phi, t));
}

}  // namespace bohr

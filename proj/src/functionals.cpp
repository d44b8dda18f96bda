#include "bohr/functionals.hpp"

#include "bohr/errors.hpp"
#include "bohr/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace bohr {

namespace {

constexpr double kGrowthTol = 1e-11;
// The closed forms have removable singularities at β = 0 and β = 1/2.
constexpr double kRemovableBand = 1e-6;

void require_radius(double r, bool allow_one, const char* what) {
    const bool ok = allow_one ? (r >= 0.0 && r <= 1.0) : (r >= 0.0 && r < 1.0);
    if (!ok) {
        throw DomainError(std::string(what) + ": radius " + std::to_string(r) + " out of range");
    }
}

void require_beta(double beta) {
    if (!(beta >= 0.0 && beta < 1.0)) {
        throw DomainError("beta must lie in [0, 1), got " + std::to_string(beta));
    }
}

void require_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw DomainError("|alpha| must lie in [0, 1], got " + std::to_string(alpha));
    }
}

}  // namespace

AlphaParam::AlphaParam(double alpha_abs) : abs_(alpha_abs) { require_alpha(alpha_abs); }

double growth_L(const ExtremalPair& pair, const PhiSpec& phi, AlphaParam alpha, double r) {
    require_radius(r, true, "growth_L");
    if (r == 1.0) return distance_lower_bound(pair, phi, alpha).value;
    if (r == 0.0) return 0.0;
    const double a = alpha.abs();
    return integrate([&](double t) { return (1.0 - a * t) * eval_kprime_neg(pair, phi, t); }, 0.0, r,
                     {.abs_tol = kGrowthTol});
}

Estimate distance_lower_bound(const ExtremalPair& pair, const PhiSpec& phi, AlphaParam alpha) {
    const BoundaryQuantities b = boundary_quantities(pair, phi);
    const double a = alpha.abs();
    return {-b.k_neg1 - a * b.int_t_kprime_neg, b.error * (1.0 + a), b.extrapolated};
}

double growth_R(const ExtremalPair& pair, const PhiSpec&, AlphaParam alpha, double r) {
    require_radius(r, false, "growth_R");
    return eval(pair.k, r) + alpha.abs() * eval(pair.weighted_kprime, r);
}

double bohr_majorant_RC(const ExtremalPair& pair, AlphaParam alpha, double r) {
    require_radius(r, false, "bohr_majorant_RC");
    return eval(pair.m_k, r) + alpha.abs() * eval(pair.weighted_m_kprime, r);
}

AreaBounds area_bounds(const ExtremalPair& pair, AlphaParam alpha, double r) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("area_bounds needs r in (0, 1)");
    const double a2 = alpha.abs() * alpha.abs();
    constexpr double two_pi = 2.0 * std::numbers::pi;
    if (pair.has_closed_form()) {
        const auto& kp = pair.closed_kprime;
        const auto part = [&](double sign) {
            return integrate(
                [&](double t) {
                    const double v = kp(sign * t);
                    return t * (1.0 - a2 * t * t) * v * v;
                },
                0.0, r, {.abs_tol = kGrowthTol});
        };
        return {two_pi * part(-1.0), two_pi * part(1.0)};
    }
    const auto series_part = [&](double x) { return eval(pair.area_t1, x) - a2 * eval(pair.area_t3, x); };
    return {two_pi * series_part(-r), two_pi * series_part(r)};
}

double improved_Rf(const ExtremalPair& pair, AlphaParam alpha, double r) {
    if (!(alpha.abs() < 1.0)) throw DomainError("improved Bohr radius needs |alpha| < 1");
    require_radius(r, false, "improved_Rf");
    const double a2 = alpha.abs() * alpha.abs();
    return bohr_majorant_RC(pair, alpha, r) + eval(pair.area_t1, r) - a2 * eval(pair.area_t3, r);
}

ConjugateTerms conjugate_Tc_T_RCc(const ExtremalPair& pair, AlphaParam alpha, double r) {
    require_radius(r, false, "conjugate_Tc_T_RCc");
    const double t_c = eval(pair.conj_tc, r);
    const double t_int = eval(pair.conj_t, r);
    return {t_c, t_int, t_int + alpha.abs() * eval(pair.conj_t_weighted, r)};
}

double janowski_L_closed(double alpha, double beta, double r) {
    require_alpha(alpha);
    require_beta(beta);
    require_radius(r, true, "janowski_L_closed");
    const double a = alpha;
    if (std::abs(beta) < kRemovableBand) {
        return (1.0 + a) * r / (1.0 + r) - a * std::log1p(r);
    }
    if (std::abs(beta - 0.5) < kRemovableBand) {
        return -a * r + (1.0 + a) * std::log1p(r);
    }
    const double tb = 2.0 * beta;
    const double num = -(a + tb) * (1.0 + r) + std::pow(1.0 + r, tb) * (a + tb - (tb - 1.0) * a * r);
    return num / (tb * (tb - 1.0) * (1.0 + r));
}

double janowski_R_closed(double alpha, double beta, double r) {
    require_alpha(alpha);
    require_beta(beta);
    require_radius(r, false, "janowski_R_closed");
    const double a = alpha;
    if (std::abs(beta) < kRemovableBand) {
        return (1.0 + a) * r / (1.0 - r) + a * std::log1p(-r);
    }
    if (std::abs(beta - 0.5) < kRemovableBand) {
        return -a * r - (1.0 + a) * std::log1p(-r);
    }
    const double tb = 2.0 * beta;
    const double num = (a + tb) * (1.0 - r) - std::pow(1.0 - r, tb) * (a + tb + (tb - 1.0) * a * r);
    return num / (tb * (tb - 1.0) * (1.0 - r));
}

double D1(double alpha, double beta, double r) {
    return janowski_R_closed(alpha, beta, r) - janowski_L_closed(alpha, beta, 1.0);
}

CoeffBounds coeff_bounds(double alpha, double beta, unsigned n) {
    require_alpha(alpha);
    require_beta(beta);
    if (n < 2) throw DomainError("coefficient bounds start at n = 2");
    // a_n = (1/n!) Π_{j=2}^{n} (j − 2β); b_n = |α|(n−1)/n! · Π_{j=2}^{n−1} (j − 2β).
    double prod_to_n_minus_1 = 1.0;
    for (unsigned j = 2; j < n; ++j) prod_to_n_minus_1 *= (static_cast<double>(j) - 2.0 * beta) / j;
    const double nd = static_cast<double>(n);
    const double a_bound = prod_to_n_minus_1 * (nd - 2.0 * beta) / nd;
    const double b_bound = alpha * (nd - 1.0) * prod_to_n_minus_1 / nd;
    return {a_bound, b_bound, n};
}

}  // namespace bohr

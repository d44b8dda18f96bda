#include "bohr/radius.hpp"

#include "bohr/errors.hpp"
#include "bohr/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bohr {

namespace {

constexpr double kOneThird = 1.0 / 3.0;
constexpr double kScanHi = 0.999;

std::function<double(double)> capped_target(const RadiusQuery& q, const ExtremalPair& pair,
                                            double target);

double pipeline_hi(const RadiusQuery& q, const ExtremalPair& pair) {
    double hi = kScanHi;
    const auto limit = [&](const TruncatedSeries& s) { hi = std::min(hi, s.r_max()); };
    switch (q.pipeline) {
        case Pipeline::hc:
            limit(pair.m_k);
            limit(pair.weighted_m_kprime);
            break;
        case Pipeline::improved:
            limit(pair.m_k);
            limit(pair.weighted_m_kprime);
            limit(pair.area_t1);
            limit(pair.area_t3);
            break;
        case Pipeline::hcc:
            limit(pair.conj_tc);
            limit(pair.conj_t);
            limit(pair.conj_t_weighted);
            break;
        case Pipeline::mab:
            break;
    }
    return hi;
}

std::string fmt_double(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

RadiusResult solve_capped(const RadiusQuery& q, const ExtremalPair& pair) {
    if (!(q.tolerance > 0.0 && q.tolerance <= 1e-4)) {
        throw DomainError("tolerance must lie in (0, 1e-4]");
    }
    const Estimate dist = distance_lower_bound(pair, q.phi, q.alpha);
    const auto g = capped_target(q, pair, dist.value);
    const double hi = pipeline_hi(q, pair);

    RootSearchOptions opt;
    opt.tol = q.tolerance;
    opt.uncertainty = dist.extrapolated ? dist.error : 0.0;
    const RootResult root = smallest_root(g, 0.0, hi, opt);

    RadiusResult res;
    res.pipeline = q.pipeline;
    res.alpha = q.alpha.abs();
    res.beta = q.phi.beta();
    res.r_f = root.root;
    res.cap_applied = root.root > kOneThird;
    res.bohr_radius = std::min(kOneThird, root.root);
    res.residual = root.residual;
    res.bracket = root.bracket;
    res.distance_lower_bound = dist.value;
    res.sharp = q.pipeline == Pipeline::hc && q.phi.nonnegative_coefficients() && root.root <= kOneThird;
    res.later_brackets = root.later_brackets;
    if (res.cap_applied) res.notes.push_back("capped at 1/3");
    if (dist.extrapolated) {
        res.notes.push_back("extrapolated boundary integral (error " + fmt_double(dist.error) + ")");
    }
    if (root.uncertain) res.notes.push_back("uncertain bracket");
    if (!root.later_brackets.empty()) {
        res.notes.push_back(std::to_string(root.later_brackets.size()) + " later sign change(s)");
    }
    if (hi < kScanHi) res.notes.push_back("search truncated at r = " + fmt_double(hi));
    for (const auto& n : q.phi.notes()) res.notes.push_back(n);
    return res;
}

}  // namespace

std::string to_string(Pipeline p) {
    switch (p) {
        case Pipeline::hc: return "hc";
        case Pipeline::hcc: return "hcc";
        case Pipeline::improved: return "improved";
        case Pipeline::mab: return "mab";
    }
    return "?";
}

Pipeline parse_pipeline(const std::string& name) {
    if (name == "hc") return Pipeline::hc;
    if (name == "hcc") return Pipeline::hcc;
    if (name == "improved") return Pipeline::improved;
    if (name == "mab") return Pipeline::mab;
    throw DomainError("unknown pipeline '" + name + "'");
}

RootResult smallest_root(const std::function<double(double)>& g, double lo, double hi,
                         RootSearchOptions opt) {
    if (!(lo < hi)) throw DomainError("smallest_root needs lo < hi");
    const double g_lo = g(lo);
    if (!(g_lo < 0.0)) {
        throw NoRootError("target is not negative at the left end of the search interval", g_lo, g(hi));
    }

    RootResult out{};
    std::optional<Bracket> first;
    double prev_x = lo, prev_g = g_lo;
    const auto steps = static_cast<long>(std::ceil((hi - lo) / opt.grid_step - 1e-9));
    for (long i = 1; i <= steps; ++i) {
        const double x = (i == steps) ? hi : lo + static_cast<double>(i) * opt.grid_step;
        const double gx = g(x);
        if (!std::isfinite(gx)) throw Error("target function is not finite at r = " + std::to_string(x));
        if (opt.uncertainty > 0.0 && std::abs(gx) <= opt.uncertainty) out.uncertain = true;
        const bool crossed = (prev_g < 0.0) != (gx < 0.0);
        if (crossed) {
            if (!first) {
                first = Bracket{prev_x, x};
            } else {
                out.later_brackets.push_back({prev_x, x});
            }
        }
        prev_x = x;
        prev_g = gx;
    }
    if (!first) throw NoRootError("no sign change on the search interval", g_lo, prev_g);

    double a = first->lo, b = first->hi;
    // a loose tol still refines until the residual meets the fixed ceiling
    for (int it = 0; it < opt.max_bisections; ++it) {
        const double mid = 0.5 * (a + b);
        if (b - a <= 2.0 * opt.tol && std::abs(g(mid)) <= kResidualCeiling) break;
        (g(mid) < 0.0 ? a : b) = mid;
    }
    out.root = 0.5 * (a + b);
    out.bracket = {a, b};
    out.residual = std::abs(g(out.root));
    return out;
}

std::function<double(double)> radius_target(const RadiusQuery& q, const ExtremalPair& pair) {
    if (q.pipeline == Pipeline::mab) {
        const AlphaParam alpha = q.alpha;
        const double beta = q.beta ? *q.beta : q.phi.beta().value_or(0.0);
        return [alpha, beta](double r) { return D1(alpha.abs(), beta, r); };
    }
    return capped_target(q, pair, distance_lower_bound(pair, q.phi, q.alpha).value);
}

namespace {

std::function<double(double)> capped_target(const RadiusQuery& q, const ExtremalPair& pair,
                                            double target) {
    const AlphaParam alpha = q.alpha;
    switch (q.pipeline) {
        case Pipeline::hc:
            return [&pair, alpha, target](double r) { return bohr_majorant_RC(pair, alpha, r) - target; };
        case Pipeline::hcc:
            return [&pair, alpha, target](double r) {
                return conjugate_Tc_T_RCc(pair, alpha, r).r_cc - target;
            };
        case Pipeline::improved:
            return [&pair, alpha, target](double r) { return improved_Rf(pair, alpha, r) - target; };
        case Pipeline::mab:
            break;
    }
    throw DomainError("unreachable pipeline");
}

}  // namespace

RadiusResult bohr_radius_hc(const RadiusQuery& q, const ExtremalPair& pair) {
    RadiusQuery qq = q;
    qq.pipeline = Pipeline::hc;
    return solve_capped(qq, pair);
}

RadiusResult bohr_radius_hcc(const RadiusQuery& q, const ExtremalPair& pair) {
    RadiusQuery qq = q;
    qq.pipeline = Pipeline::hcc;
    return solve_capped(qq, pair);
}

RadiusResult bohr_radius_improved(const RadiusQuery& q, const ExtremalPair& pair) {
    if (!(q.alpha.abs() < 1.0)) throw DomainError("improved pipeline needs |alpha| < 1");
    RadiusQuery qq = q;
    qq.pipeline = Pipeline::improved;
    return solve_capped(qq, pair);
}

RadiusResult bohr_radius_mab(double alpha, double beta, double tol) {
    if (!(tol > 0.0 && tol <= 1e-4)) throw DomainError("tolerance must lie in (0, 1e-4]");
    const AlphaParam a(alpha);
    (void)janowski_L_closed(alpha, beta, 1.0);  // validates beta

    RootSearchOptions opt;
    opt.tol = tol;
    const RootResult root =
        smallest_root([&](double r) { return D1(a.abs(), beta, r); }, 0.0, kScanHi, opt);

    RadiusResult res;
    res.pipeline = Pipeline::mab;
    res.alpha = alpha;
    res.beta = beta;
    res.r_f = root.root;
    res.bohr_radius = root.root;
    res.cap_applied = false;
    res.residual = root.residual;
    res.bracket = root.bracket;
    res.distance_lower_bound = janowski_L_closed(alpha, beta, 1.0);
    res.sharp = true;
    res.later_brackets = root.later_brackets;
    if (!root.later_brackets.empty()) {
        res.notes.push_back(std::to_string(root.later_brackets.size()) + " later sign change(s)");
    }
    return res;
}

RadiusResult solve_radius(const RadiusQuery& q, const ExtremalPair* pair) {
    if (q.pipeline == Pipeline::mab) {
        if (!q.beta && !q.phi.beta()) throw DomainError("mab pipeline needs a janowski phi or --beta");
        return bohr_radius_mab(q.alpha.abs(), q.beta ? *q.beta : *q.phi.beta(), q.tolerance);
    }
    std::optional<ExtremalPair> owned;
    if (pair == nullptr) {
        owned = build_extremal(q.phi);
        pair = &*owned;
    }
    switch (q.pipeline) {
        case Pipeline::hc: return bohr_radius_hc(q, *pair);
        case Pipeline::hcc: return bohr_radius_hcc(q, *pair);
        case Pipeline::improved: return bohr_radius_improved(q, *pair);
        case Pipeline::mab: break;
    }
    throw DomainError("unreachable pipeline");
}

Poly43Constants poly43_constants(double tol) {
    const auto kp = [](double t) { return std::exp(4.0 * t / 3.0 + t * t / 3.0); };
    const SimpsonOptions opt{.abs_tol = tol, .max_depth = 40};
    Poly43Constants c{};
    c.k_one_third = integrate(kp, 0.0, kOneThird, opt);
    c.k_neg1 = -integrate([&](double t) { return kp(-t); }, 0.0, 1.0, opt);
    c.int_t_kprime_third = integrate([&](double t) { return t * kp(t); }, 0.0, kOneThird, opt);
    c.int_t_kprime_neg_one = integrate([&](double t) { return t * kp(-t); }, 0.0, 1.0, opt);
    c.alpha_threshold =
        alpha_threshold_from(c.k_one_third, c.k_neg1, c.int_t_kprime_third, c.int_t_kprime_neg_one);
    return c;
}

double alpha_threshold_from(double k_one_third, double k_neg1, double int_third, double int_neg_one) {
    return (-k_neg1 - k_one_third) / (int_third + int_neg_one);
}

double alpha_threshold_poly43(double tol) { return poly43_constants(tol).alpha_threshold; }

}  // namespace bohr

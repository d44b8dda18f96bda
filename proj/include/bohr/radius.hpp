#pragma once

#include "bohr/extremal.hpp"
#include "bohr/functionals.hpp"
#include "bohr/phi.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bohr {

enum class Pipeline { hc, hcc, improved, mab };

std::string to_string(Pipeline p);
Pipeline parse_pipeline(const std::string& name);

struct Bracket {
    double lo;
    double hi;
};

struct RootResult {
    double root;
    Bracket bracket;
    double residual;                     ///< |G(root)|
    std::vector<Bracket> later_brackets;  ///< sign changes found after the first one
    bool uncertain = false;               ///< some grid sign was within ±uncertainty
};

/// Every solved root satisfies |G(root)| <= this, whatever the bracket tolerance.
inline constexpr double kResidualCeiling = 1e-8;

struct RootSearchOptions {
    double tol = 1e-10;
    double grid_step = 1e-3;
    double uncertainty = 0.0;  ///< |G| ≤ this at a grid point makes its sign ambiguous
    int max_bisections = 60;
};

/// First root of G on [lo, hi]: uniform grid scan for the first sign change
/// (G(lo) < 0 required), then bisection until the bracket is ≤ 2·tol wide.
/// Throws NoRootError when no sign change exists.
RootResult smallest_root(const std::function<double(double)>& g, double lo, double hi,
                         RootSearchOptions opt = {});

struct RadiusQuery {
    PhiSpec phi;
    AlphaParam alpha{0.0};
    Pipeline pipeline = Pipeline::hc;
    std::optional<double> beta;  ///< mab only; defaults to the janowski beta of phi
    double tolerance = 1e-10;
};

struct RadiusResult {
    Pipeline pipeline;
    double alpha;
    std::optional<double> beta;
    double r_f;
    double bohr_radius;          ///< min(1/3, r_f) for hc/hcc/improved, r_f for mab
    bool cap_applied;
    double residual;
    Bracket bracket;
    double distance_lower_bound;  ///< L(1, α) or L(1, α, β); a lower bound, not the distance
    bool sharp;
    std::vector<std::string> notes;
    std::vector<Bracket> later_brackets;
};

RadiusResult bohr_radius_hc(const RadiusQuery& q, const ExtremalPair& pair);
RadiusResult bohr_radius_hcc(const RadiusQuery& q, const ExtremalPair& pair);
RadiusResult bohr_radius_improved(const RadiusQuery& q, const ExtremalPair& pair);
RadiusResult bohr_radius_mab(double alpha, double beta, double tol = 1e-10);

/// Dispatches on q.pipeline; builds the extremal pair when none is given.
RadiusResult solve_radius(const RadiusQuery& q, const ExtremalPair* pair = nullptr);

/// The G(r) whose smallest root defines r_f for the query.
std::function<double(double)> radius_target(const RadiusQuery& q, const ExtremalPair& pair);

/// Constants of φ(z) = 1 + 4z/3 + 2z²/3 computed by quadrature of the closed-form K'.
struct Poly43Constants {
    double k_one_third;           ///< K(1/3)
    double k_neg1;                ///< K(−1)
    double int_t_kprime_third;    ///< ∫_0^{1/3} t K'(t) dt
    double int_t_kprime_neg_one;  ///< ∫_0^1 t K'(−t) dt
    double alpha_threshold;       ///< |α| above which r_f < 1/3
};

Poly43Constants poly43_constants(double tol = 1e-12);

/// Solves K(1/3) + α·I_{1/3} = −K(−1) − α·I_{−1} for α.
double alpha_threshold_from(double k_one_third, double k_neg1, double int_third, double int_neg_one);

double alpha_threshold_poly43(double tol = 1e-12);

}  // namespace bohr

#pragma once

#include "bohr/extremal.hpp"
#include "bohr/phi.hpp"

#include <cstddef>

namespace bohr {

/// Modulus |α| of the dilation parameter in g'(z) = α z h'(z).
class AlphaParam {
public:
    explicit AlphaParam(double alpha_abs);
    double abs() const noexcept { return abs_; }

private:
    double abs_;
};

/// Bounds on the area S_r of f(D_r).
struct AreaBounds {
    double lower;
    double upper;
};

/// Sharp coefficient bounds |a_n| ≤ a_bound, |b_n| ≤ b_bound for M(α, β).
struct CoeffBounds {
    double a_bound;
    double b_bound;
    unsigned n;
};

struct ConjugateTerms {
    double t_c;    ///< T_c(r)
    double t_int;  ///< T(r)
    double r_cc;   ///< R_{C_c}(r) = T(r) + |α| ∫_0^r t T_c(t) dt
};

/// L(r, α) = −K(−r) − |α| ∫_0^r t K'(−t) dt, r ∈ [0, 1].
double growth_L(const ExtremalPair& pair, const PhiSpec& phi, AlphaParam alpha, double r);

/// L(1, α) with its error estimate; custom φ goes through extrapolation.
Estimate distance_lower_bound(const ExtremalPair& pair, const PhiSpec& phi, AlphaParam alpha);

/// R(r, α) = K(r) + |α| ∫_0^r t K'(t) dt, r ∈ [0, 1).
double growth_R(const ExtremalPair& pair, const PhiSpec& phi, AlphaParam alpha, double r);

/// R_C(r) = M_K(r) + |α| ∫_0^r t M_{K'}(t) dt.
double bohr_majorant_RC(const ExtremalPair& pair, AlphaParam alpha, double r);

/// 2π ∫_0^r t(1 − |α|²t²) K'(∓t)² dt. Presets integrate the closed form,
/// custom φ uses the squared series.
AreaBounds area_bounds(const ExtremalPair& pair, AlphaParam alpha, double r);

/// R'_f(r) = R_C(r) + ∫_0^r t(1 − |α|²t²) K'(t)² dt; requires |α| < 1.
double improved_Rf(const ExtremalPair& pair, AlphaParam alpha, double r);

ConjugateTerms conjugate_Tc_T_RCc(const ExtremalPair& pair, AlphaParam alpha, double r);

/// Closed-form growth bounds for M(α, β); r ∈ [0, 1].
double janowski_L_closed(double alpha, double beta, double r);
/// r ∈ [0, 1).
double janowski_R_closed(double alpha, double beta, double r);

/// D_1(r) = R(r, α, β) − L(1, α, β).
double D1(double alpha, double beta, double r);

CoeffBounds coeff_bounds(double alpha, double beta, unsigned n);

}  // namespace bohr

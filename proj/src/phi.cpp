#include "bohr/phi.hpp"

#include "bohr/errors.hpp"

#include <cmath>
#include <complex>
#include <fstream>
#include <numbers>
#include <sstream>

namespace bohr {

namespace {

constexpr double kClosedFormAgreement = 1e-10;

void check_closed_form(const PhiSpec& phi) {
    for (double t : {-0.5, -0.1, 0.1, 0.5}) {
        const double diff = std::abs(phi.closed_eval(t) - eval(phi.series(), t));
        if (diff > kClosedFormAgreement) {
            throw Error("closed form and series disagree at t = " + std::to_string(t));
        }
    }
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_real(const std::string& token) {
    const std::string t = trim(token);
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(t, &used);
    } catch (const std::exception&) {
        throw DomainError("not a real number: '" + t + "'");
    }
    if (used != t.size()) throw DomainError("not a real number: '" + t + "'");
    return v;
}

}  // namespace

TruncatedSeries PhiSpec::series_at(std::size_t order) const {
    if (kind_ == PhiKind::janowski) {
        std::vector<double> c(order + 1, 2.0 * (1.0 - *beta_));
        c[0] = 1.0;
        return TruncatedSeries(std::move(c));
    }
    return series_.resized(order);
}

double PhiSpec::closed_eval(double t) const {
    if (!closed_eval_) throw DomainError("phi has no closed-form evaluator");
    return closed_eval_(t);
}

bool PhiSpec::nonnegative_coefficients() const {
    for (double b : series_.coeffs()) {
        if (b < 0.0) return false;
    }
    return true;
}

std::string PhiSpec::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case PhiKind::janowski: os << "janowski(beta=" << *beta_ << ")"; break;
        case PhiKind::poly43: os << "poly43"; break;
        case PhiKind::custom: {
            os << "custom(";
            const auto c = series_.coeffs();
            for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
            os << ")";
            break;
        }
    }
    return os.str();
}

PhiSpec make_janowski(double beta) {
    if (!(beta >= 0.0 && beta < 1.0)) {
        throw DomainError("janowski beta must lie in [0, 1), got " + std::to_string(beta));
    }
    PhiSpec phi;
    phi.kind_ = PhiKind::janowski;
    phi.beta_ = beta;
    std::vector<double> c(kDefaultOrder + 1, 2.0 * (1.0 - beta));
    c[0] = 1.0;
    phi.series_ = TruncatedSeries(std::move(c));
    phi.closed_eval_ = [beta](double t) { return (1.0 + (1.0 - 2.0 * beta) * t) / (1.0 - t); };
    phi.validation_ = Validation::certified;
    check_closed_form(phi);
    return phi;
}

PhiSpec make_poly43() {
    PhiSpec phi;
    phi.kind_ = PhiKind::poly43;
    phi.series_ = TruncatedSeries({1.0, 4.0 / 3.0, 2.0 / 3.0});
    phi.closed_eval_ = [](double t) { return 1.0 + 4.0 * t / 3.0 + 2.0 * t * t / 3.0; };
    phi.validation_ = Validation::certified;
    check_closed_form(phi);
    return phi;
}

PhiSpec make_unchecked(const TruncatedSeries& coeffs) {
    PhiSpec phi;
    phi.kind_ = PhiKind::custom;
    phi.series_ = coeffs;
    phi.validation_ = Validation::partial;
    return phi;
}

PhiSpec make_custom(const TruncatedSeries& coeffs) {
    if (coeffs[0] != 1.0) throw DomainError("custom phi needs B_0 = 1");
    if (!(coeffs[1] > 0.0)) throw DomainError("custom phi needs B_1 > 0");
    PhiSpec phi = make_unchecked(coeffs);

    const auto c = coeffs.coeffs();
    int bad = 0;
    for (int k = 0; k < 64; ++k) {
        const std::complex<double> z = std::polar(0.95, 2.0 * std::numbers::pi * k / 64.0);
        std::complex<double> acc = 0.0;
        for (std::size_t n = c.size(); n-- > 0;) acc = acc * z + c[n];
        if (acc.real() <= 0.0) ++bad;
    }
    if (bad > 0) {
        phi.notes_.push_back("warning: Re phi <= 0 at " + std::to_string(bad) +
                             " of 64 sample points on |z| = 0.95");
    }
    phi.notes_.push_back("validated: partial");
    return phi;
}

PhiSpec make_from_psi(const TruncatedSeries& coeffs) {
    if (coeffs[1] >= 0.0) return make_custom(coeffs);
    std::vector<double> c(coeffs.coeffs().begin(), coeffs.coeffs().end());
    for (std::size_t n = 1; n < c.size(); n += 2) c[n] = -c[n];
    PhiSpec phi = make_custom(TruncatedSeries(std::move(c)));
    phi.notes_.push_back("alias: non-Ma-Minda psi reflected z -> -z; HC(psi) = HC(phi)");
    return phi;
}

double eval_phi(const PhiSpec& phi, double t) {
    if (!std::isfinite(t)) throw DomainError("phi evaluated at non-finite t");
    switch (phi.kind()) {
        case PhiKind::janowski:
            if (t < -1.0 || t >= 1.0) throw DomainError("janowski phi needs t in [-1, 1)");
            return phi.closed_eval(t);
        case PhiKind::poly43:
            if (std::abs(t) > 1.0) throw DomainError("poly43 phi needs |t| <= 1");
            return phi.closed_eval(t);
        case PhiKind::custom:
            if (std::abs(t) > 1.0) throw DomainError("custom phi needs |t| <= 1");
            break;
    }
    // Polynomial: Horner directly, the closed disk is fine.
    const auto c = phi.series().coeffs();
    double acc = 0.0;
    for (std::size_t n = c.size(); n-- > 0;) acc = acc * t + c[n];
    return acc;
}

TruncatedSeries parse_coefficient_list(const std::string& text) {
    std::vector<double> c;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) c.push_back(parse_real(token));
    if (c.empty()) throw DomainError("empty coefficient list");
    return TruncatedSeries(std::move(c));
}

TruncatedSeries read_coefficient_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open coefficient file " + path);
    std::vector<double> c;
    std::string line;
    while (std::getline(in, line)) {
        const std::string t = trim(line.substr(0, line.find('#')));
        if (t.empty()) continue;
        c.push_back(parse_real(t));
    }
    if (c.empty()) throw DomainError("coefficient file " + path + " has no entries");
    return TruncatedSeries(std::move(c));
}

}  // namespace bohr

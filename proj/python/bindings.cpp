#include "bohr/errors.hpp"
#include "bohr/extremal.hpp"
#include "bohr/functionals.hpp"
#include "bohr/phi.hpp"
#include "bohr/radius.hpp"
#include "bohr/report.hpp"
#include "bohr/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace bohr;

namespace {

PhiSpec phi_from(const std::string& kind, std::optional<double> beta,
                 const std::optional<std::vector<double>>& coeffs, bool allow_psi) {
    PhiChoice c;
    c.allow_psi = allow_psi;
    if (kind == "janowski") {
        c.kind = PhiKind::janowski;
    } else if (kind == "poly43") {
        c.kind = PhiKind::poly43;
    } else if (kind == "custom") {
        if (!coeffs) throw DomainError("custom phi needs coeffs");
        c.kind = PhiKind::custom;
        c.custom = TruncatedSeries(*coeffs);
    } else {
        throw DomainError("unknown phi '" + kind + "'");
    }
    return make_phi(c, beta);
}

py::dict result_dict(const RadiusResult& r) {
    py::dict d;
    d["pipeline"] = to_string(r.pipeline);
    d["alpha"] = r.alpha;
    d["beta"] = r.beta;
    d["r_f"] = r.r_f;
    d["bohr_radius"] = r.bohr_radius;
    d["cap_applied"] = r.cap_applied;
    d["residual"] = r.residual;
    d["bracket"] = py::make_tuple(r.bracket.lo, r.bracket.hi);
    d["distance_lower_bound"] = r.distance_lower_bound;
    d["sharp"] = r.sharp;
    d["notes"] = r.notes;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Bohr radii and growth bounds for harmonic mappings with convex analytic part";
    m.attr("__version__") = kToolVersion;

    // translators are tried newest first, so the base class goes in first
    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<NoRootError>(m, "NoRootError", PyExc_ArithmeticError);

    // RadiusResult crosses the boundary as a dict
    m.def(
        "radius",
        [](const std::string& pipeline, double alpha, const std::string& phi, std::optional<double> beta,
           std::optional<std::vector<double>> coeffs, bool allow_psi, double tol) {
            const Pipeline p = parse_pipeline(pipeline);
            RadiusQuery q;
            q.phi = p == Pipeline::mab ? make_janowski(beta.value_or(0.0))
                                       : phi_from(phi, beta, coeffs, allow_psi);
            q.alpha = AlphaParam(alpha);
            q.pipeline = p;
            q.beta = beta;
            q.tolerance = tol;
            return result_dict(solve_radius(q));
        },
        py::arg("pipeline"), py::arg("alpha"), py::arg("phi") = "janowski", py::arg("beta") = py::none(),
        py::arg("coeffs") = py::none(), py::arg("allow_psi") = false, py::arg("tol") = 1e-10);

    m.def("growth_bounds",
          [](double alpha, double r, const std::string& phi, std::optional<double> beta,
             std::optional<std::vector<double>> coeffs) {
              const PhiSpec spec = phi_from(phi, beta, coeffs, false);
              const ExtremalPair pair = build_extremal(spec);
              const AlphaParam a(alpha);
              return py::make_tuple(growth_L(pair, spec, a, r), growth_R(pair, spec, a, r));
          },
          py::arg("alpha"), py::arg("r"), py::arg("phi") = "janowski", py::arg("beta") = py::none(),
          py::arg("coeffs") = py::none(), "(L(r, alpha), R(r, alpha)) for 0 <= r < 1");

    m.def("d1", &D1, py::arg("alpha"), py::arg("beta"), py::arg("r"));
    m.def("janowski_L", &janowski_L_closed, py::arg("alpha"), py::arg("beta"), py::arg("r"));
    m.def("janowski_R", &janowski_R_closed, py::arg("alpha"), py::arg("beta"), py::arg("r"));
    m.def(
        "coeff_bounds",
        [](double alpha, double beta, unsigned n) {
            const CoeffBounds b = coeff_bounds(alpha, beta, n);
            return py::make_tuple(b.a_bound, b.b_bound);
        },
        py::arg("alpha"), py::arg("beta"), py::arg("n"));

    m.def("poly43_constants", [] {
        const Poly43Constants c = poly43_constants();
        py::dict d;
        d["k_one_third"] = c.k_one_third;
        d["k_neg1"] = c.k_neg1;
        d["int_t_kprime_third"] = c.int_t_kprime_third;
        d["int_t_kprime_neg_one"] = c.int_t_kprime_neg_one;
        d["alpha_threshold"] = c.alpha_threshold;
        return d;
    });

    m.def(
        "table",
        [](const std::string& pipeline, const std::string& alphas, const std::string& phi,
           std::optional<double> beta, const std::string& format, unsigned jobs) {
            TableRequest req;
            req.pipeline = parse_pipeline(pipeline);
            if (phi == "poly43") req.phi.kind = PhiKind::poly43;
            else if (phi != "janowski") throw DomainError("table supports janowski and poly43");
            if (beta) req.betas = {*beta};
            req.alphas = parse_grid(alphas);
            req.jobs = jobs;
            req.with_timestamp = false;
            std::string out;
            {
                py::gil_scoped_release release;
                const GridReport report = compute_table(req);
                out = format == "json" ? render_json(report) : format == "text" ? render_text(report)
                                                                                 : render_csv(report);
            }
            return out;
        },
        py::arg("pipeline"), py::arg("alphas"), py::arg("phi") = "janowski", py::arg("beta") = py::none(),
        py::arg("format") = "csv", py::arg("jobs") = 1);

    m.def(
        "verify",
        [](std::optional<std::string> only) {
            VerifyOptions opt;
            opt.only = std::move(only);
            VerifyReport report;
            {
                py::gil_scoped_release release;
                report = run_verification(opt);
            }
            return py::make_tuple(report.passed(), render_verify(report));
        },
        py::arg("only") = py::none(), "(passed, report text)");
}

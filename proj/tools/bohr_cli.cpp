#include "bohr/errors.hpp"
#include "bohr/phi.hpp"
#include "bohr/radius.hpp"
#include "bohr/report.hpp"
#include "bohr/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;
using namespace bohr;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitComputation = 3;

// Thrown for bad flag values discovered after CLI11 parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string pipeline;
    std::string phi = "janowski";
    std::optional<double> beta;
    std::string alpha = "0";
    std::string coeffs;
    bool allow_psi = false;
    std::optional<double> tol;
    std::optional<std::size_t> order;
    std::string format;
    std::string out;
    unsigned jobs = 1;
    bool no_meta = false;
    std::string config;

    std::string from_json;
    std::string radii = "0:0.99:0.01";
    std::string layout = "wide";
    std::string only;
    bool inject_fault = false;
};

struct Config {
    std::optional<double> tol;
    std::optional<std::size_t> order;
    std::optional<std::string> out_dir;
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

Config read_config(const std::string& path) {
    Config cfg;
    if (path.empty()) return cfg;
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line.substr(0, line.find('#')));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw UsageError(path + ":" + std::to_string(lineno) + ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "tol" || key == "tolerance") {
                cfg.tol = std::stod(value);
            } else if (key == "order") {
                cfg.order = std::stoul(value);
            } else if (key == "out_dir") {
                cfg.out_dir = value;
            } else {
                throw UsageError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
            }
        } catch (const std::logic_error&) {
            throw UsageError(path + ":" + std::to_string(lineno) + ": bad value for '" + key + "'");
        }
    }
    return cfg;
}

struct Resolved {
    double tol = 1e-10;
    std::optional<std::size_t> order;
    std::optional<std::string> out_dir;
};

Resolved resolve(const Options& o) {
    const Config cfg = read_config(o.config);
    Resolved r;
    r.tol = o.tol.value_or(cfg.tol.value_or(1e-10));
    r.order = o.order ? o.order : cfg.order;
    r.out_dir = cfg.out_dir;
    if (!(r.tol > 0.0 && r.tol <= 1e-4)) throw UsageError("--tol must lie in (0, 1e-4]");
    if (r.order && *r.order < 8) throw UsageError("--order must be at least 8");
    return r;
}

fs::path output_path(const std::string& out, const Resolved& r) {
    fs::path p(out);
    if (p.is_relative() && r.out_dir) p = fs::path(*r.out_dir) / p;
    return p;
}

void emit(const std::string& text, const Options& o, const Resolved& r) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    const fs::path p = output_path(o.out, r);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream f(p, std::ios::binary);
    if (!f) throw Error("cannot write '" + p.string() + "'");
    f << text;
}

PhiChoice phi_choice(const Options& o) {
    PhiChoice c;
    c.allow_psi = o.allow_psi;
    if (o.phi == "janowski") {
        c.kind = PhiKind::janowski;
    } else if (o.phi == "poly43") {
        c.kind = PhiKind::poly43;
    } else if (o.phi == "custom") {
        c.kind = PhiKind::custom;
        if (o.coeffs.empty()) throw UsageError("--phi custom needs --coeffs");
        try {
            c.custom = fs::exists(o.coeffs) ? read_coefficient_file(o.coeffs) : parse_coefficient_list(o.coeffs);
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
    } else {
        throw UsageError("unknown phi '" + o.phi + "'");
    }
    if (c.kind != PhiKind::custom && !o.coeffs.empty()) throw UsageError("--coeffs needs --phi custom");
    return c;
}

void check_beta(const Options& o) {
    if (o.beta && !(*o.beta >= 0.0 && *o.beta < 1.0)) throw UsageError("--beta must lie in [0, 1)");
}

PhiSpec build_phi(const PhiChoice& choice, std::optional<double> beta) {
    try {
        return make_phi(choice, beta);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

Pipeline pipeline_of(const Options& o, Pipeline fallback) {
    if (o.pipeline.empty()) return fallback;
    try {
        return parse_pipeline(o.pipeline);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

std::vector<double> grid_of(const std::string& spec, const char* flag) {
    try {
        return parse_grid(spec);
    } catch (const Error& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

std::string format_of(const Options& o, const std::string& fallback,
                      std::initializer_list<const char*> allowed) {
    const std::string f = o.format.empty() ? fallback : o.format;
    for (const char* a : allowed) {
        if (f == a) return f;
    }
    throw UsageError("format '" + f + "' is not supported by this command");
}

int cmd_radius(const Options& o) {
    const Resolved r = resolve(o);
    const Pipeline p = pipeline_of(o, Pipeline::hc);
    const std::string fmt = format_of(o, "text", {"text", "json"});
    const std::vector<double> alphas = grid_of(o.alpha, "--alpha");
    if (alphas.size() != 1) throw UsageError("radius takes a single --alpha; use table for grids");
    if (p == Pipeline::mab && !o.beta) throw UsageError("--pipeline mab needs --beta");
    const PhiChoice choice = phi_choice(o);
    if (p == Pipeline::mab && choice.kind != PhiKind::janowski) {
        throw UsageError("--pipeline mab works with --phi janowski only");
    }
    if (alphas.front() < 0.0 || alphas.front() > 1.0) throw UsageError("--alpha must lie in [0, 1]");

    check_beta(o);
    PhiSpec phi = build_phi(choice, o.beta);
    RadiusQuery q{phi, AlphaParam(alphas.front()), p, o.beta, r.tol};
    std::optional<ExtremalPair> pair;
    if (p != Pipeline::mab) pair = r.order ? build_extremal(phi, *r.order) : build_extremal(phi);
    const RadiusResult res = solve_radius(q, pair ? &*pair : nullptr);
    const std::string desc = p == Pipeline::mab ? "janowski(beta=" + format_full(*o.beta) + ")" : phi.describe();
    emit(fmt == "json" ? render_radius_json(res, desc) : render_radius_text(res, desc), o, r);
    return kExitOk;
}

std::string render_table(const GridReport& report, const std::string& fmt) {
    if (fmt == "json") return render_json(report);
    if (fmt == "text") return render_text(report);
    return render_csv(report);
}

int cmd_table(const Options& o) {
    const Resolved r = resolve(o);
    const std::string fmt = format_of(o, "csv", {"csv", "json", "text"});
    if (!o.from_json.empty()) {
        std::ifstream in(o.from_json);
        if (!in) throw UsageError("cannot open '" + o.from_json + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        GridReport report;
        try {
            report = parse_report_json(ss.str());
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
        if (o.no_meta) report.meta.timestamp.reset();
        emit(render_table(report, fmt), o, r);
        return kExitOk;
    }

    TableRequest req;
    req.pipeline = pipeline_of(o, Pipeline::mab);
    req.phi = phi_choice(o);
    if (req.pipeline == Pipeline::mab && req.phi.kind != PhiKind::janowski) {
        throw UsageError("--pipeline mab works with --phi janowski only");
    }
    check_beta(o);
    if (o.beta) req.betas = {*o.beta};
    if (req.phi.kind == PhiKind::custom) (void)build_phi(req.phi, std::nullopt);
    req.alphas = grid_of(o.alpha, "--alpha");
    for (double a : req.alphas) {
        if (a < 0.0 || a > 1.0) throw UsageError("--alpha values must lie in [0, 1]");
    }
    req.tolerance = r.tol;
    req.order = r.order;
    req.jobs = o.jobs;
    req.with_timestamp = !o.no_meta;
    emit(render_table(compute_table(req), fmt), o, r);
    return kExitOk;
}

std::string alpha_label(double a) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", a);
    return buf;
}

int cmd_curve(const Options& o) {
    const Resolved r = resolve(o);
    format_of(o, "csv", {"csv"});
    CurveRequest req;
    req.pipeline = pipeline_of(o, Pipeline::mab);
    req.phi = phi_choice(o);
    check_beta(o);
    if (req.phi.kind == PhiKind::custom) (void)build_phi(req.phi, std::nullopt);
    req.beta = o.beta;
    req.alphas = grid_of(o.alpha, "--alpha");
    req.radii = grid_of(o.radii, "--r");
    req.order = r.order;
    if (req.pipeline == Pipeline::mab && !req.beta) throw UsageError("--pipeline mab needs --beta");
    for (double x : req.radii) {
        if (x < 0.0 || x > 0.999) throw UsageError("--r values must lie in [0, 0.999]");
    }
    const CurveData curve = compute_curve(req);
    if (o.layout == "wide") {
        emit(render_curve_csv(curve), o, r);
        return kExitOk;
    }
    fs::path dir = o.out.empty() ? fs::path(r.out_dir.value_or(".")) : output_path(o.out, r);
    fs::create_directories(dir);
    for (std::size_t i = 0; i < curve.alphas.size(); ++i) {
        const fs::path p = dir / ("curve_alpha_" + alpha_label(curve.alphas[i]) + ".csv");
        std::ofstream f(p, std::ios::binary);
        if (!f) throw Error("cannot write '" + p.string() + "'");
        f << render_curve_column_csv(curve, i);
        std::cout << p.string() << "\n";
    }
    return kExitOk;
}

int cmd_constants(const Options& o) {
    const Resolved r = resolve(o);
    if (o.phi != "poly43") throw UsageError("reference constants exist for --phi poly43 only");
    const std::string fmt = format_of(o, "text", {"text", "json", "csv"});
    const auto lines = poly43_constant_report();
    std::ostringstream os;
    if (fmt == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& l : lines) {
            arr.push_back({{"name", l.name},
                           {"computed", l.computed},
                           {"reference", l.reference},
                           {"delta", l.delta()},
                           {"tolerance", l.tolerance},
                           {"pass", l.pass()}});
        }
        os << nlohmann::json{{"phi", "poly43"}, {"constants", arr}}.dump(2) << "\n";
    } else if (fmt == "csv") {
        os << "name,computed,reference,delta,tolerance,pass\n";
        for (const auto& l : lines) {
            os << '"' << l.name << "\"," << format_full(l.computed) << ',' << format_full(l.reference) << ','
               << format_full(l.delta()) << ',' << format_full(l.tolerance) << ','
               << (l.pass() ? "true" : "false") << "\n";
        }
    } else {
        char buf[200];
        for (const auto& l : lines) {
            std::snprintf(buf, sizeof buf, "%-24s computed %.10f  reference %.6f  delta %+.2e  %s\n",
                          l.name.c_str(), l.computed, l.reference, l.delta(), l.pass() ? "ok" : "off");
            os << buf;
        }
    }
    emit(os.str(), o, r);
    return kExitOk;
}

int cmd_verify(const Options& o) {
    const Resolved r = resolve(o);
    const std::string fmt = format_of(o, "text", {"text", "json"});
    VerifyOptions vo;
    if (!o.only.empty()) {
        if (o.only != "tables" && o.only != "constants" && o.only != "roots" && o.only != "oracle") {
            throw UsageError("--only must be one of tables, constants, roots, oracle");
        }
        vo.only = o.only;
    }
    vo.inject_kprime_fault = o.inject_fault;
    const VerifyReport report = run_verification(vo);
    if (fmt == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& l : report.lines) {
            const char* status = l.status == CheckStatus::pass   ? "pass"
                                 : l.status == CheckStatus::fail ? "fail"
                                                                 : "informational";
            arr.push_back({{"group", l.group},
                           {"name", l.name},
                           {"measured", l.measured},
                           {"expected", l.expected},
                           {"tolerance", l.tolerance},
                           {"status", status}});
        }
        emit(nlohmann::json{{"passed", report.passed()}, {"seconds", report.seconds}, {"checks", arr}}.dump(2) +
                 "\n",
             o, r);
    } else {
        emit(render_verify(report), o, r);
    }
    return report.passed() ? kExitOk : kExitVerifyFailed;
}

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--config", o.config, "key = value file (tol, order, out_dir)");
    sub->add_option("--tol", o.tol, "root tolerance");
    sub->add_option("--order", o.order, "fixed series working order");
    sub->add_option("--format", o.format, "csv, json or text");
    sub->add_option("--out", o.out, "output path");
}

void add_phi(CLI::App* sub, Options& o) {
    sub->add_option("--pipeline", o.pipeline, "hc, hcc, improved or mab");
    sub->add_option("--phi", o.phi, "janowski, poly43 or custom")->capture_default_str();
    sub->add_option("--beta", o.beta, "janowski parameter in [0, 1)");
    sub->add_option("--alpha", o.alpha, "value, list or a:b:step grid")->capture_default_str();
    sub->add_option("--coeffs", o.coeffs, "custom phi coefficients: file or comma list");
    sub->add_flag("--allow-psi", o.allow_psi, "accept psi'(0) < 0 by reflecting z to -z");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bohr radii and growth bounds for harmonic mappings with convex analytic part"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);
    Options o;

    auto* radius = app.add_subcommand("radius", "solve one Bohr radius");
    add_phi(radius, o);
    add_common(radius, o);

    auto* table = app.add_subcommand("table", "radius grid over alpha (and beta)");
    add_phi(table, o);
    add_common(table, o);
    table->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u));
    table->add_flag("--no-meta", o.no_meta, "omit the timestamp");
    table->add_option("--from-json", o.from_json, "re-render a JSON table");

    auto* curve = app.add_subcommand("curve", "G(r) samples for plotting");
    add_phi(curve, o);
    add_common(curve, o);
    curve->add_option("--r", o.radii, "radius grid in [0, 0.999]")->capture_default_str();
    curve->add_option("--layout", o.layout, "wide or files")
        ->check(CLI::IsMember({"wide", "files"}))
        ->capture_default_str();

    auto* constants = app.add_subcommand("constants", "extremal-function constants for poly43");
    constants->add_option("--phi", o.phi, "must be poly43")->capture_default_str();
    add_common(constants, o);

    auto* verify = app.add_subcommand("verify", "run the reference checks");
    add_common(verify, o);
    verify->add_option("--only", o.only, "tables, constants, roots or oracle");
    verify->add_flag("--inject-fault", o.inject_fault, "perturb a K' coefficient (negative control)")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*radius) return cmd_radius(o);
        if (*table) return cmd_table(o);
        if (*curve) return cmd_curve(o);
        if (*constants) {
            if (constants->count("--phi") == 0) o.phi = "poly43";
            return cmd_constants(o);
        }
        if (*verify) return cmd_verify(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "computation failed: " << e.what() << "\n";
        return kExitComputation;
    }
    return kExitUsage;
}

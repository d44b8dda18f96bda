#include "bohr/report.hpp"

#include "bohr/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <exception>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace bohr {

namespace {

using nlohmann::json;

double round_grid(double v) {
    const double r = std::round(v * 1e12) / 1e12;
    return r == 0.0 ? 0.0 : r;
}

double parse_number(const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw DomainError("bad number in grid spec: '" + s + "'");
    }
    if (used != s.size()) throw DomainError("bad number in grid spec: '" + s + "'");
    return v;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string fixed3(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

json meta_to_json(const GridMeta& m) {
    json j = {{"pipeline", m.pipeline},
              {"phi", m.phi},
              {"tolerance", m.tolerance},
              {"tool_version", m.tool_version}};
    if (m.timestamp) j["timestamp"] = *m.timestamp;
    return j;
}

}  // namespace

std::string format_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> parse_grid(const std::string& spec) {
    std::vector<double> out;
    if (spec.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(spec);
        std::string tok;
        while (std::getline(ss, tok, ':')) parts.push_back(tok);
        if (parts.size() != 3) throw DomainError("grid spec must be a:b:step, got '" + spec + "'");
        const double a = parse_number(parts[0]);
        const double b = parse_number(parts[1]);
        const double step = parse_number(parts[2]);
        if (!(step > 0.0)) throw DomainError("grid step must be positive");
        if (b < a) throw DomainError("grid end lies below its start");
        const auto count = static_cast<long>(std::floor((b - a) / step + 1e-9)) + 1;
        for (long i = 0; i < count; ++i) out.push_back(round_grid(a + static_cast<double>(i) * step));
    } else {
        std::stringstream ss(spec);
        std::string tok;
        while (std::getline(ss, tok, ',')) out.push_back(parse_number(tok));
    }
    if (out.empty()) throw DomainError("empty grid spec");
    return out;
}

PhiSpec make_phi(const PhiChoice& choice, std::optional<double> beta) {
    switch (choice.kind) {
        case PhiKind::janowski:
            return make_janowski(beta.value_or(0.0));
        case PhiKind::poly43:
            return make_poly43();
        case PhiKind::custom:
            if (!choice.custom) throw DomainError("custom phi needs coefficients");
            return choice.allow_psi ? make_from_psi(*choice.custom) : make_custom(*choice.custom);
    }
    throw DomainError("unknown phi kind");
}

GridRow to_row(const RadiusResult& r) {
    return {r.alpha, r.beta, r.r_f, r.bohr_radius, r.residual, r.sharp, join(r.notes, "; ")};
}

GridReport compute_table(const TableRequest& req) {
    if (req.alphas.empty()) throw DomainError("table needs at least one alpha");
    std::vector<double> alphas = req.alphas;
    std::sort(alphas.begin(), alphas.end());
    std::vector<std::optional<double>> betas;
    const bool uses_beta = req.pipeline == Pipeline::mab || req.phi.kind == PhiKind::janowski;
    if (uses_beta) {
        std::vector<double> b = req.betas.empty() ? std::vector<double>{0.0} : req.betas;
        std::sort(b.begin(), b.end());
        for (double x : b) betas.emplace_back(x);
    } else {
        betas.emplace_back(std::nullopt);
    }

    // φ and its extremal pair are shared by every alpha of a beta.
    std::vector<PhiSpec> phis;
    std::vector<std::optional<ExtremalPair>> pairs(betas.size());
    for (const auto& b : betas) {
        phis.push_back(req.pipeline == Pipeline::mab ? make_janowski(*b) : make_phi(req.phi, b));
    }
    if (req.pipeline != Pipeline::mab) {
        for (std::size_t i = 0; i < betas.size(); ++i) {
            pairs[i] = req.order ? build_extremal(phis[i], *req.order) : build_extremal(phis[i]);
        }
    }

    const std::size_t cells = betas.size() * alphas.size();
    std::vector<std::optional<GridRow>> rows(cells);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    const auto worker = [&] {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= cells) return;
            const std::size_t bi = idx / alphas.size();
            const std::size_t ai = idx % alphas.size();
            try {
                RadiusQuery q{phis[bi], AlphaParam(alphas[ai]), req.pipeline, betas[bi], req.tolerance};
                const RadiusResult res = solve_radius(q, pairs[bi] ? &*pairs[bi] : nullptr);
                GridRow row = to_row(res);
                row.beta = betas[bi];
                if (row.residual > kResidualCeiling) throw Error("residual above 1e-8 at alpha " + format_full(row.alpha));
                rows[idx] = std::move(row);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(req.jobs, static_cast<unsigned>(cells)));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    GridReport report;
    for (auto& r : rows) report.rows.push_back(std::move(*r));
    report.meta.pipeline = to_string(req.pipeline);
    if (req.pipeline == Pipeline::mab) {
        report.meta.phi = "janowski";
    } else {
        report.meta.phi = betas.size() == 1 ? phis.front().describe() : "janowski";
    }
    report.meta.tolerance = req.tolerance;
    if (req.with_timestamp) report.meta.timestamp = utc_timestamp();
    return report;
}

std::string render_csv(const GridReport& report) {
    std::string out = "alpha,beta,r_f,bohr_radius,residual,sharp,notes\n";
    for (const auto& r : report.rows) {
        out += format_full(r.alpha) + ',' + (r.beta ? format_full(*r.beta) : std::string{}) + ',' +
               format_full(r.r_f) + ',' + format_full(r.bohr_radius) + ',' + format_full(r.residual) + ',' +
               (r.sharp ? "true" : "false") + ',' + csv_field(r.notes) + '\n';
    }
    return out;
}

std::string render_json(const GridReport& report) {
    json rows = json::array();
    for (const auto& r : report.rows) {
        rows.push_back({{"alpha", r.alpha},
                        {"beta", r.beta ? json(*r.beta) : json(nullptr)},
                        {"r_f", r.r_f},
                        {"bohr_radius", r.bohr_radius},
                        {"residual", r.residual},
                        {"sharp", r.sharp},
                        {"notes", r.notes}});
    }
    const json doc = {{"meta", meta_to_json(report.meta)}, {"rows", rows}};
    return doc.dump(2) + "\n";
}

GridReport parse_report_json(const std::string& text) {
    GridReport report;
    try {
        const json doc = json::parse(text);
        const json& m = doc.at("meta");
        report.meta.pipeline = m.at("pipeline").get<std::string>();
        report.meta.phi = m.at("phi").get<std::string>();
        report.meta.tolerance = m.at("tolerance").get<double>();
        report.meta.tool_version = m.at("tool_version").get<std::string>();
        if (m.contains("timestamp")) report.meta.timestamp = m.at("timestamp").get<std::string>();
        for (const json& r : doc.at("rows")) {
            GridRow row;
            row.alpha = r.at("alpha").get<double>();
            if (!r.at("beta").is_null()) row.beta = r.at("beta").get<double>();
            row.r_f = r.at("r_f").get<double>();
            row.bohr_radius = r.at("bohr_radius").get<double>();
            row.residual = r.at("residual").get<double>();
            row.sharp = r.at("sharp").get<bool>();
            row.notes = r.at("notes").get<std::string>();
            report.rows.push_back(std::move(row));
        }
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed report JSON: ") + e.what());
    }
    return report;
}

std::string render_text(const GridReport& report) {
    std::ostringstream os;
    os << "pipeline " << report.meta.pipeline << ", phi " << report.meta.phi << "\n";
    os << std::left << std::setw(7) << "alpha" << std::setw(7) << "beta" << std::setw(8) << "r_f"
       << std::setw(8) << "bohr" << std::setw(11) << "residual" << std::setw(7) << "sharp"
       << "notes\n";
    for (const auto& r : report.rows) {
        char res[32];
        std::snprintf(res, sizeof res, "%.1e", r.residual);
        os << std::setw(7) << fixed3(r.alpha) << std::setw(7) << (r.beta ? fixed3(*r.beta) : "-")
           << std::setw(8) << fixed3(r.r_f) << std::setw(8) << fixed3(r.bohr_radius) << std::setw(11)
           << res << std::setw(7) << (r.sharp ? "yes" : "no") << r.notes << "\n";
    }
    return os.str();
}

std::string render_radius_json(const RadiusResult& r, const std::string& phi_description) {
    json later = json::array();
    for (const auto& b : r.later_brackets) later.push_back({b.lo, b.hi});
    const json j = {{"pipeline", to_string(r.pipeline)},
                    {"phi", phi_description},
                    {"alpha", r.alpha},
                    {"beta", r.beta ? json(*r.beta) : json(nullptr)},
                    {"r_f", r.r_f},
                    {"bohr_radius", r.bohr_radius},
                    {"cap_applied", r.cap_applied},
                    {"residual", r.residual},
                    {"bracket", {r.bracket.lo, r.bracket.hi}},
                    {"distance_lower_bound", r.distance_lower_bound},
                    {"sharp", r.sharp},
                    {"notes", r.notes},
                    {"later_brackets", later}};
    return j.dump(2) + "\n";
}

std::string render_radius_text(const RadiusResult& r, const std::string& phi_description) {
    std::ostringstream os;
    os << std::setprecision(12);
    os << "pipeline:             " << to_string(r.pipeline) << "\n"
       << "phi:                  " << phi_description << "\n"
       << "alpha:                " << r.alpha << "\n";
    if (r.beta) os << "beta:                 " << *r.beta << "\n";
    os << "r_f:                  " << r.r_f << "  (" << fixed3(r.r_f) << ")\n"
       << "bohr_radius:          " << r.bohr_radius << "  (" << fixed3(r.bohr_radius) << ")\n"
       << "cap_applied:          " << (r.cap_applied ? "yes" : "no") << "\n"
       << "residual:             " << r.residual << "\n"
       << "bracket:              [" << r.bracket.lo << ", " << r.bracket.hi << "]\n"
       << "distance_lower_bound: " << r.distance_lower_bound << "\n"
       << "sharp:                " << (r.sharp ? "yes" : "no") << "\n";
    for (const auto& n : r.notes) os << "note:                 " << n << "\n";
    return os.str();
}

CurveData compute_curve(const CurveRequest& req) {
    if (req.alphas.empty() || req.radii.empty()) throw DomainError("curve needs alphas and radii");
    for (double r : req.radii) {
        if (!(r >= 0.0 && r <= 0.999)) throw DomainError("curve radii must lie in [0, 0.999]");
    }
    CurveData out{req.alphas, req.radii, {}};
    std::optional<PhiSpec> phi;
    std::optional<ExtremalPair> pair;
    if (req.pipeline == Pipeline::mab) {
        if (!req.beta) throw DomainError("mab curve needs --beta");
    } else {
        phi = make_phi(req.phi, req.beta);
        pair = req.order ? build_extremal(*phi, *req.order) : build_extremal(*phi);
    }
    const ExtremalPair unused;
    const ExtremalPair& pair_ref = pair ? *pair : unused;
    for (double a : req.alphas) {
        RadiusQuery q{phi ? *phi : make_janowski(*req.beta), AlphaParam(a), req.pipeline, req.beta, 1e-10};
        const auto g = radius_target(q, pair_ref);
        std::vector<double> col;
        for (double r : req.radii) col.push_back(g(r));
        out.values.push_back(std::move(col));
    }
    return out;
}

std::string render_curve_csv(const CurveData& curve) {
    if (curve.alphas.size() == 1) return render_curve_column_csv(curve, 0);
    std::string out = "r";
    for (double a : curve.alphas) {
        char buf[48];
        std::snprintf(buf, sizeof buf, ",alpha_%g", a);
        out += buf;
    }
    out += '\n';
    for (std::size_t j = 0; j < curve.radii.size(); ++j) {
        out += format_full(curve.radii[j]);
        for (const auto& col : curve.values) out += ',' + format_full(col[j]);
        out += '\n';
    }
    return out;
}

std::string render_curve_column_csv(const CurveData& curve, std::size_t index) {
    std::string out = "r,value\n";
    for (std::size_t j = 0; j < curve.radii.size(); ++j) {
        out += format_full(curve.radii[j]) + ',' + format_full(curve.values.at(index)[j]) + '\n';
    }
    return out;
}

}  // namespace bohr

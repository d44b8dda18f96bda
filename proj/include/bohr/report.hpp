#pragma once

#include "bohr/phi.hpp"
#include "bohr/radius.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bohr {

inline constexpr const char* kToolVersion = "0.1.0";

struct GridRow {
    double alpha = 0.0;
    std::optional<double> beta;
    double r_f = 0.0;
    double bohr_radius = 0.0;
    double residual = 0.0;
    bool sharp = false;
    std::string notes;
};

struct GridMeta {
    std::string pipeline;
    std::string phi;
    double tolerance = 1e-10;
    std::string tool_version = kToolVersion;
    std::optional<std::string> timestamp;  ///< absent with --no-meta
};

/// Rows sorted by (beta, alpha).
struct GridReport {
    std::vector<GridRow> rows;
    GridMeta meta;
};

/// "a:b:step" (inclusive), "x,y,z", or a single value.
std::vector<double> parse_grid(const std::string& spec);

/// Which φ a table or curve uses. `custom` is consulted for PhiKind::custom.
struct PhiChoice {
    PhiKind kind = PhiKind::janowski;
    std::optional<TruncatedSeries> custom;
    bool allow_psi = false;
};

/// Builds φ for one grid beta (ignored unless kind is janowski).
PhiSpec make_phi(const PhiChoice& choice, std::optional<double> beta);

struct TableRequest {
    Pipeline pipeline = Pipeline::mab;
    PhiChoice phi;
    std::vector<double> betas;  ///< empty for non-janowski φ outside mab
    std::vector<double> alphas;
    double tolerance = 1e-10;
    std::optional<std::size_t> order;  ///< fixed working order; adaptive when absent
    unsigned jobs = 1;
    bool with_timestamp = true;
};

/// Computes every (beta, alpha) cell; cells run on up to `jobs` threads and
/// land in deterministic row order. Any failing cell throws.
GridReport compute_table(const TableRequest& req);

GridRow to_row(const RadiusResult& r);

std::string render_csv(const GridReport& report);
std::string render_json(const GridReport& report);
std::string render_text(const GridReport& report);
GridReport parse_report_json(const std::string& text);

/// JSON object for a single radius result.
std::string render_radius_json(const RadiusResult& r, const std::string& phi_description);
std::string render_radius_text(const RadiusResult& r, const std::string& phi_description);

struct CurveRequest {
    Pipeline pipeline = Pipeline::mab;
    PhiChoice phi;
    std::optional<double> beta;
    std::vector<double> alphas;
    std::vector<double> radii;
    std::optional<std::size_t> order;
};

/// values[i][j] is G(radii[j]) for alphas[i]: D_1 for mab, else the pipeline's
/// R-functional minus L(1, α).
struct CurveData {
    std::vector<double> alphas;
    std::vector<double> radii;
    std::vector<std::vector<double>> values;
};

CurveData compute_curve(const CurveRequest& req);

/// "r,value" for one alpha; "r,alpha_<a>,..." otherwise.
std::string render_curve_csv(const CurveData& curve);
/// Two-column CSV for alphas[index].
std::string render_curve_column_csv(const CurveData& curve, std::size_t index);

/// Round-trip decimal formatting (17 significant digits).
std::string format_full(double v);

}  // namespace bohr

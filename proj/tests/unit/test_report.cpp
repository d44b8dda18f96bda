#include "bohr/errors.hpp"
#include "bohr/report.hpp"

#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

using namespace bohr;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) out.push_back(line);
    return out;
}

TableRequest mab_request(double beta, const std::string& grid) {
    TableRequest req;
    req.pipeline = Pipeline::mab;
    req.betas = {beta};
    req.alphas = parse_grid(grid);
    req.with_timestamp = false;
    return req;
}

}  // namespace

TEST(Grid, Parsing) {
    const auto g = parse_grid("0:0.9:0.1");
    ASSERT_EQ(g.size(), 10u);
    EXPECT_DOUBLE_EQ(g[3], 0.3);
    EXPECT_DOUBLE_EQ(g[9], 0.9);
    EXPECT_EQ(parse_grid("0:0:0.1"), std::vector<double>{0.0});
    EXPECT_EQ(parse_grid("0.25"), std::vector<double>{0.25});
    EXPECT_EQ(parse_grid("0.5,0.1"), (std::vector<double>{0.5, 0.1}));
    EXPECT_THROW(parse_grid("0:1"), DomainError);
    EXPECT_THROW(parse_grid("0:1:0"), DomainError);
    EXPECT_THROW(parse_grid("1:0:0.1"), DomainError);
    EXPECT_THROW(parse_grid("a"), DomainError);
    EXPECT_THROW(parse_grid(""), DomainError);
}

TEST(Table, Table1Reproduction) {
    const GridReport r = compute_table(mab_request(0.0, "0:0.9:0.1"));
    const double expected[] = {0.333, 0.321, 0.308, 0.296, 0.284, 0.273, 0.261, 0.250, 0.238, 0.227};
    ASSERT_EQ(r.rows.size(), 10u);
    for (std::size_t i = 0; i < 10; ++i) {
        EXPECT_NEAR(r.rows[i].r_f, expected[i], 1.5e-3);
        EXPECT_LE(r.rows[i].residual, 1e-8);
        EXPECT_TRUE(r.rows[i].sharp);
        EXPECT_EQ(r.rows[i].beta, 0.0);
    }
}

TEST(Table, RowsSortedAndDeterministicAcrossJobs) {
    TableRequest req;
    req.pipeline = Pipeline::hc;
    req.phi.kind = PhiKind::janowski;
    req.betas = {0.5};
    req.alphas = {0.9, 0.1, 0.5, 0.0, 0.3};
    req.with_timestamp = false;
    const std::string serial = render_csv(compute_table(req));
    req.jobs = 4;
    const std::string parallel = render_csv(compute_table(req));
    EXPECT_EQ(serial, parallel);
    const GridReport r = compute_table(req);
    for (std::size_t i = 1; i < r.rows.size(); ++i) EXPECT_LT(r.rows[i - 1].alpha, r.rows[i].alpha);
}

TEST(Table, NonJanowskiRowsHaveNoBeta) {
    TableRequest req;
    req.pipeline = Pipeline::hc;
    req.phi.kind = PhiKind::poly43;
    req.alphas = {0.6};
    req.with_timestamp = false;
    const GridReport r = compute_table(req);
    ASSERT_EQ(r.rows.size(), 1u);
    EXPECT_FALSE(r.rows[0].beta.has_value());
    EXPECT_EQ(r.meta.phi, "poly43");
    EXPECT_EQ(lines_of(render_csv(r))[1].substr(0, 6), "0.5999");
}

TEST(Table, FailingCellThrows) {
    TableRequest req;
    req.pipeline = Pipeline::improved;
    req.phi.kind = PhiKind::poly43;
    req.alphas = {0.5, 1.0};
    EXPECT_THROW(compute_table(req), DomainError);
}

TEST(Csv, HeaderAndQuoting) {
    GridReport r;
    r.rows.push_back({0.5, 0.25, 0.3, 0.3, 1e-12, true, "capped at 1/3; a \"quoted\", note"});
    r.rows.push_back({0.6, std::nullopt, 0.4, 0.3, 0.0, false, ""});
    const auto lines = lines_of(render_csv(r));
    ASSERT_EQ(lines.size(), 3u);
    EXPECT_EQ(lines[0], "alpha,beta,r_f,bohr_radius,residual,sharp,notes");
    EXPECT_EQ(lines[1], "0.5,0.25,0.29999999999999999,0.29999999999999999,9.9999999999999998e-13,true,"
                        "\"capped at 1/3; a \"\"quoted\"\", note\"");
    EXPECT_EQ(lines[2], "0.59999999999999998,,0.40000000000000002,0.29999999999999999,0,false,");
    EXPECT_EQ(render_csv(r).find('\r'), std::string::npos);
}

TEST(Json, RoundTripReproducesRendering) {
    TableRequest req = mab_request(0.5, "0:0.9:0.3");
    req.with_timestamp = true;
    const GridReport original = compute_table(req);
    ASSERT_TRUE(original.meta.timestamp.has_value());
    const GridReport back = parse_report_json(render_json(original));
    EXPECT_EQ(render_csv(back), render_csv(original));
    EXPECT_EQ(render_json(back), render_json(original));
    EXPECT_EQ(render_text(back), render_text(original));
    EXPECT_THROW(parse_report_json("{\"rows\": []}"), DomainError);
    EXPECT_THROW(parse_report_json("not json"), DomainError);
}

TEST(Json, NoMetaOmitsTimestamp) {
    const GridReport r = compute_table(mab_request(0.0, "0.1"));
    EXPECT_EQ(render_json(r).find("timestamp"), std::string::npos);
    EXPECT_NE(render_json(r).find("\"tool_version\""), std::string::npos);
}

TEST(Text, ThreeDecimals) {
    const auto lines = lines_of(render_text(compute_table(mab_request(0.9, "0"))));
    ASSERT_GE(lines.size(), 3u);
    EXPECT_NE(lines[2].find("0.815"), std::string::npos);
}

TEST(Curve, SpecSamples) {
    CurveRequest req;
    req.pipeline = Pipeline::mab;
    req.beta = 0.0;
    req.alphas = {0.0};
    req.radii = {0.0, 1.0 / 3.0};
    CurveData c = compute_curve(req);
    EXPECT_NEAR(c.values[0][0], -0.5, 1e-15);
    EXPECT_NEAR(c.values[0][1], 0.0, 1e-15);

    req.beta = 0.5;
    req.alphas = {0.9};
    req.radii = {0.30, 0.31};
    c = compute_curve(req);
    EXPECT_LT(c.values[0][0], 0.0);
    EXPECT_GT(c.values[0][1], 0.0);

    req.radii = {1.0};
    EXPECT_THROW(compute_curve(req), DomainError);
}

TEST(Curve, WideAndColumnLayouts) {
    CurveRequest req;
    req.pipeline = Pipeline::hc;
    req.phi.kind = PhiKind::poly43;
    req.alphas = {0.0, 0.5};
    req.radii = {0.0, 0.2};
    const CurveData c = compute_curve(req);
    const auto wide = lines_of(render_curve_csv(c));
    EXPECT_EQ(wide[0], "r,alpha_0,alpha_0.5");
    ASSERT_EQ(wide.size(), 3u);
    const auto col = lines_of(render_curve_column_csv(c, 1));
    EXPECT_EQ(col[0], "r,value");
    EXPECT_EQ(col.size(), 3u);
    EXPECT_LT(c.values[1][0], 0.0);
}

TEST(RadiusRendering, JsonAndText) {
    const RadiusResult r = bohr_radius_mab(0.3, 0.5);
    const std::string j = render_radius_json(r, "janowski(beta=0.5)");
    EXPECT_NE(j.find("\"r_f\": 0.4296650"), std::string::npos);
    const std::string t = render_radius_text(r, "janowski(beta=0.5)");
    EXPECT_NE(t.find("(0.430)"), std::string::npos);
}

#include "bohr/errors.hpp"
#include "bohr/verify.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace bohr;

TEST(Verify, ReferenceTablesShape) {
    ASSERT_EQ(reference_tables().size(), 3u);
    EXPECT_TRUE(is_known_misprint(0.5, 0.8));
    EXPECT_FALSE(is_known_misprint(0.5, 0.7));
    EXPECT_FALSE(is_known_misprint(0.0, 0.8));
}

TEST(Verify, TablesOnlyRunsThirtyCells) {
    VerifyOptions opt;
    opt.only = "tables";
    const VerifyReport r = run_verification(opt);
    ASSERT_EQ(r.lines.size(), 30u);
    EXPECT_TRUE(r.passed());
    const auto info = std::count_if(r.lines.begin(), r.lines.end(),
                                    [](const CheckLine& l) { return l.status == CheckStatus::informational; });
    EXPECT_EQ(info, 1);
    const auto it = std::find_if(r.lines.begin(), r.lines.end(),
                                 [](const CheckLine& l) { return l.status == CheckStatus::informational; });
    EXPECT_NEAR(it->measured, 0.3251, 1e-4);
    EXPECT_NEAR(it->expected, 0.321, 1e-12);
}

TEST(Verify, FullRunPasses) {
    const VerifyReport r = run_verification();
    for (const auto& l : r.lines) EXPECT_NE(l.status, CheckStatus::fail) << l.group << ": " << l.name;
    EXPECT_TRUE(r.passed());
    EXPECT_LT(r.seconds, 60.0);
    EXPECT_NE(render_verify(r).find("0 failed"), std::string::npos);
}

TEST(Verify, InjectedFaultFailsOdeResidual) {
    VerifyOptions opt;
    opt.only = "oracle";
    opt.inject_kprime_fault = true;
    const VerifyReport r = run_verification(opt);
    EXPECT_FALSE(r.passed());
    for (const auto& l : r.lines) {
        const bool ode = l.name.rfind("ODE residual", 0) == 0;
        if (ode) EXPECT_EQ(l.status, CheckStatus::fail) << l.name;
        else EXPECT_NE(l.status, CheckStatus::fail) << l.name;
    }
}

TEST(Verify, UnknownGroup) {
    VerifyOptions opt;
    opt.only = "nope";
    EXPECT_THROW(run_verification(opt), DomainError);
}

TEST(Verify, ConstantReport) {
    const auto lines = poly43_constant_report();
    ASSERT_EQ(lines.size(), 5u);
    for (const auto& l : lines) EXPECT_TRUE(l.pass()) << l.name << " delta " << l.delta();
}

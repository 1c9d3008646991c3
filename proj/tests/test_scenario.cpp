#include <gtest/gtest.h>

#include "homalg/report_json.hpp"
#include "homalg/scenario.hpp"

using namespace homalg;

TEST(Sl2Scenario, AllSuitesPassAtSmallBounds) {
    Sl2Options opt;
    opt.bound_h = 2;
    opt.bound_a = 3;
    const auto s = make_sl2_scenario(opt);
    for (const auto& r : run_suites(s, sl2_suites())) EXPECT_TRUE(r.passed()) << render_text(r);
}

TEST(Sl2Scenario, ClassicalSuitesPass) {
    Sl2Options opt;
    opt.bound_h = 2;
    opt.bound_a = 3;
    opt.classical = true;
    const auto s = make_sl2_scenario(opt);
    for (const auto& r : run_suites(s, sl2_suites())) EXPECT_TRUE(r.passed()) << render_text(r);
}

TEST(Sl2Scenario, NegativeControlVerdictsAgree) {
    Sl2Options opt;
    opt.bound_h = 1;
    opt.bound_a = 1;
    opt.negative_control = true;
    const auto s = make_sl2_scenario(opt);
    const auto reports = run_suites(s, sl2_suites(), {"module-hom-algebra", "mu-module-morphism"});
    ASSERT_EQ(reports.size(), 2u);
    EXPECT_FALSE(reports[0].passed());
    EXPECT_FALSE(reports[1].passed());
    EXPECT_EQ(reports[0].failures, reports[1].failures);
    EXPECT_TRUE(reports[0].has_counterexample({"X", "x", "y"}));
    EXPECT_TRUE(reports[1].has_counterexample({"X", "x", "y"}));
}

TEST(Sl2Scenario, UnknownSuiteRejectedBeforeRunning) {
    const auto s = make_sl2_scenario({1, 1});
    EXPECT_THROW(run_suites(s, sl2_suites(), {"multiplicativity", "no-such-suite"}), std::invalid_argument);
    EXPECT_THROW(make_sl2_scenario({0, 1}), std::invalid_argument);
}

TEST(Report, JsonShape) {
    CheckReport r{"a", "f", "b", 3, 0, {}};
    r.record({"c", {"X", "x"}, "1", "2"});
    const auto j = to_json("demo", {r});
    EXPECT_EQ(j["status"], "fail");
    EXPECT_EQ(j["reports"][0]["failures"], 1);
    EXPECT_EQ(j["reports"][0]["counterexamples"][0]["inputs"][1], "x");
    EXPECT_EQ(render_text(r).substr(0, 6), "FAIL a");
}

#include <gtest/gtest.h>

#include "lch/sweep.hpp"

using namespace lch;

namespace {

SweepConfig quickConfig() {
  SweepConfig config;
  config.scenarioTarget = 40;
  config.conformalMax = 4;
  return config;
}

}  // namespace

TEST(Sweep, AllLemmasPassOnQuickConfig) {
  const auto reports = runAllSweeps(quickConfig());
  ASSERT_EQ(reports.size(), 8u);
  for (const auto& report : reports)
    EXPECT_EQ(report.failCount(), 0) << report.lemma;
  EXPECT_TRUE(allPassed(reports));
}

TEST(Sweep, DeterministicAcrossRuns) {
  // Parallel evaluation must not leak into the report contents.
  const auto a = runAllSweeps(quickConfig());
  const auto b = runAllSweeps(quickConfig());
  EXPECT_EQ(renderText(a), renderText(b));
  EXPECT_EQ(renderSummary(a), renderSummary(b));
}

TEST(Sweep, SeedChangesScenarios) {
  SweepConfig other = quickConfig();
  other.seed += 1;
  EXPECT_NE(renderText(runAllSweeps(quickConfig())), renderText(runAllSweeps(other)));
}

TEST(Sweep, ReportShapes) {
  const auto reports = runAllSweeps(quickConfig());
  const std::string text = renderText(reports);
  EXPECT_NE(text.find("conformal_gluing | m1=2 m2=2 k=1 | ledger=+1 closed=+1 | ok"),
            std::string::npos);
  const std::string summary = renderSummary(reports);
  EXPECT_NE(summary.find("trivial_cobordism.pass=66"), std::string::npos);
  EXPECT_NE(summary.find("total.fail=0"), std::string::npos);
  EXPECT_NE(summary.find("status=ok"), std::string::npos);
}

TEST(Sweep, ConformalSweepCoversRequestedRange) {
  SweepConfig config = quickConfig();
  config.conformalMax = 7;
  const auto report = sweepConformal(config);
  // Sum over m2 of m2 choices of k, times 6 values of m1.
  EXPECT_EQ(int(report.lines.size()), 6 * 27);
  EXPECT_EQ(report.failCount(), 0);
}

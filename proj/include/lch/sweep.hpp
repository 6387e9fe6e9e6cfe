#pragma once

#include <string>
#include <vector>

#include "lch/scenario.hpp"

namespace lch {

/// Bounds and seed for the verification sweeps. Defaults follow the
/// library's standard ranges: sizes up to 5, gradings in [-3, 4], ambient
/// dimensions {1,2,3} with the default auxiliary rule, and at least 2000
/// scenarios per randomized lemma sweep.
struct SweepConfig {
  int maxM = 5;
  int maxR = 5;
  int maxL = 5;
  int gradingMin = -3;
  int gradingMax = 4;
  std::vector<int> ns = {1, 2, 3};
  unsigned long long seed = 0x1c5;
  int scenarioTarget = 2000;
  int conformalMax = 7;
  int trivialGradingMin = -5;
  int trivialGradingMax = 5;
};

/// One verified scenario: its parameters, both signs, and the verdict.
struct SweepLine {
  std::string params;
  Sign ledger;
  Sign closedForm;
  bool ok = false;
  std::string detail;  // full ledger, filled on failure
};

struct SweepReport {
  std::string lemma;
  std::vector<SweepLine> lines;

  int passCount() const;
  int failCount() const;
  const SweepLine* firstFailure() const;
};

SweepReport sweepConformal(const SweepConfig& config);
SweepReport sweepDsquared(const SweepConfig& config);
SweepReport sweepChainmapT(const SweepConfig& config);
SweepReport sweepChainmapTtilde(const SweepConfig& config);
SweepReport sweepDsquaredCancellation(const SweepConfig& config);
SweepReport sweepChainmapCancellation(const SweepConfig& config);
SweepReport sweepTrivialCobordism(const SweepConfig& config);
SweepReport sweepCanonicalGluing(const SweepConfig& config);

/// All sweeps, evaluated concurrently per scenario with deterministic
/// ordering of the results.
std::vector<SweepReport> runAllSweeps(const SweepConfig& config);

/// One line per scenario: parameters, ledger total, closed form, verdict.
std::string renderText(const std::vector<SweepReport>& reports);

/// Flat key-value block with pass/fail counts per lemma.
std::string renderSummary(const std::vector<SweepReport>& reports);

bool allPassed(const std::vector<SweepReport>& reports);

}  // namespace lch

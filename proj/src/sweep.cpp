#include "lch/sweep.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "lch/conformal.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <random>
#include <sstream>
#include <thread>

namespace lch {

namespace {

// Per-index engine so results do not depend on evaluation order.
std::mt19937_64 engineFor(unsigned long long seed, unsigned long long index) {
  std::seed_seq seq{seed, index, 0x9e3779b97f4a7c15ULL};
  return std::mt19937_64(seq);
}

int randomIn(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Evaluates one line per index, in parallel, preserving index order.
SweepReport evaluate(std::string lemma, int count,
                     const std::function<SweepLine(int)>& producer) {
  SweepReport report;
  report.lemma = std::move(lemma);
  report.lines.resize(count);
  const unsigned workers =
      std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()), 8u);
  const int chunk = std::max(1, count / int(workers) + 1);
  std::vector<std::future<void>> futures;
  for (int begin = 0; begin < count; begin += chunk) {
    const int end = std::min(count, begin + chunk);
    futures.push_back(std::async(std::launch::async, [&, begin, end]() {
      for (int i = begin; i < end; ++i) report.lines[i] = producer(i);
    }));
  }
  for (auto& f : futures) f.get();
  return report;
}

}  // namespace

int SweepReport::passCount() const {
  return int(std::count_if(lines.begin(), lines.end(),
                           [](const SweepLine& l) { return l.ok; }));
}

int SweepReport::failCount() const { return int(lines.size()) - passCount(); }

const SweepLine* SweepReport::firstFailure() const {
  for (const auto& line : lines)
    if (!line.ok) return &line;
  return nullptr;
}

SweepReport sweepConformal(const SweepConfig& config) {
  struct Case {
    int m1, m2, k;
  };
  std::vector<Case> cases;
  for (int m1 = 2; m1 <= config.conformalMax; ++m1)
    for (int m2 = 2; m2 <= config.conformalMax; ++m2)
      for (int k = 1; k <= m2; ++k) cases.push_back({m1, m2, k});
  return evaluate("conformal_gluing", int(cases.size()), [&](int i) {
    const auto [m1, m2, k] = cases[i];
    const auto result = conformalGlueSign(m1, m2, k);
    SweepLine line;
    line.params = fmt::format("m1={} m2={} k={}", m1, m2, k);
    line.ledger = result.ledger;
    line.closedForm = result.closedForm;
    line.ok = result.agree;
    if (!line.ok) line.detail = "ledger path disagrees with the closed form";
    return line;
  });
}

namespace {

GluingScenario randomDsquared(const SweepConfig& config, std::mt19937_64& rng) {
  const int m = randomIn(rng, 3, std::max(3, config.maxM));
  const int r = randomIn(rng, 2, std::max(2, config.maxR));
  const int k = randomIn(rng, 1, r);
  const int n = config.ns[rng() % config.ns.size()];
  std::vector<int> bFree(r - 1), f(m - 1);
  for (auto& g : bFree) g = randomIn(rng, config.gradingMin, config.gradingMax);
  for (auto& g : f) g = randomIn(rng, config.gradingMin, config.gradingMax);
  return makeDSquaredScenario(m, k, r, bFree, f, CappingSystemParams::forDim(n));
}

GluingScenario randomChainmapT(const SweepConfig& config, std::mt19937_64& rng) {
  const int m = randomIn(rng, 2, std::max(2, config.maxM));
  const int n = config.ns[rng() % config.ns.size()];
  std::vector<int> mi(m), b(m);
  for (auto& v : mi) v = randomIn(rng, 2, std::max(2, config.maxM));
  for (auto& g : b) g = randomIn(rng, config.gradingMin, config.gradingMax);
  return makeChainmapTScenario(mi, b, CappingSystemParams::forDim(n));
}

GluingScenario randomChainmapTtilde(const SweepConfig& config, std::mt19937_64& rng) {
  const int l = randomIn(rng, 2, std::max(2, config.maxL));
  const int k = randomIn(rng, 2, std::max(2, config.maxM));
  const int j = randomIn(rng, 1, l);
  const int n = config.ns[rng() % config.ns.size()];
  std::vector<int> cFree(l - 1), f(k);
  for (auto& g : cFree) g = randomIn(rng, config.gradingMin, config.gradingMax);
  for (auto& g : f) g = randomIn(rng, config.gradingMin, config.gradingMax);
  return makeChainmapTtildeScenario(j, cFree, f, CappingSystemParams::forDim(n));
}

}  // namespace

SweepReport sweepDsquared(const SweepConfig& config) {
  return evaluate("dsquared_sign", config.scenarioTarget, [&](int i) {
    auto rng = engineFor(config.seed, 0x0d50000 + i);
    const auto scenario = randomDsquared(config, rng);
    const auto result = dsquaredRearrangementSign(scenario);
    SweepLine line;
    line.params = scenario.describe();
    line.ledger = result.total;
    line.closedForm = result.closedForm;
    line.ok = result.matches;
    if (!line.ok) line.detail = result.ledger.toString();
    return line;
  });
}

SweepReport sweepChainmapT(const SweepConfig& config) {
  return evaluate("chainmap_T_sign", config.scenarioTarget, [&](int i) {
    auto rng = engineFor(config.seed, 0x7000000 + i);
    const auto scenario = randomChainmapT(config, rng);
    const auto result = chainmapTSign(scenario);
    SweepLine line;
    line.params = scenario.describe();
    line.ledger = result.rearrangement.total;
    line.closedForm = result.rearrangement.closedForm;
    line.ok = result.rearrangement.matches && result.boundaryMatches;
    if (!line.ok) line.detail = result.rearrangement.ledger.toString();
    return line;
  });
}

SweepReport sweepChainmapTtilde(const SweepConfig& config) {
  return evaluate("chainmap_Ttilde_sign", config.scenarioTarget, [&](int i) {
    auto rng = engineFor(config.seed, 0x7700000 + i);
    const auto scenario = randomChainmapTtilde(config, rng);
    const auto result = chainmapTtildeSign(scenario);
    SweepLine line;
    line.params = scenario.describe();
    line.ledger = result.rearrangement.total;
    line.closedForm = result.rearrangement.closedForm;
    line.ok = result.rearrangement.matches && result.boundaryMatches;
    if (!line.ok) line.detail = result.rearrangement.ledger.toString();
    return line;
  });
}

SweepReport sweepDsquaredCancellation(const SweepConfig& config) {
  return evaluate("dsquared_cancellation", config.scenarioTarget / 4, [&](int i) {
    auto rng = engineFor(config.seed, 0x0dc0000 + i);
    const int l = randomIn(rng, 4, std::max(4, config.maxR + config.maxM - 2));
    std::vector<int> word(l);
    for (auto& g : word) g = randomIn(rng, config.gradingMin, config.gradingMax);
    auto randomConfig = [&]() -> BrokenConfig {
      const int width = randomIn(rng, 2, l - 1);  // keeps the outer disk with r >= 2
      const int k = randomIn(rng, 1, l - width + 1);
      return {k, width};
    };
    const BrokenConfig first = randomConfig();
    const BrokenConfig second = randomConfig();
    const int n = config.ns[rng() % config.ns.size()];
    const auto verdict =
        dsquaredBoundaryCancellation(word, first, second, CappingSystemParams::forDim(n));
    SweepLine line;
    line.params = fmt::format("word=[{}] (k={},m1={}) vs (k={},m1={}) n={}",
                              fmt::join(word, ","), first.k, first.innerNegatives, second.k,
                              second.innerNegatives, n);
    line.ledger = verdict.requiredRelation;
    long long claimed = 1;
    for (int idx = 1; idx < first.k; ++idx) claimed += word[idx - 1];
    for (int idx = 1; idx < second.k; ++idx) claimed += word[idx - 1];
    line.closedForm = signPow(claimed);
    line.ok = verdict.holds;
    if (!line.ok)
      line.detail = verdict.firstLedger.toString() + verdict.secondLedger.toString();
    return line;
  });
}

SweepReport sweepChainmapCancellation(const SweepConfig& config) {
  return evaluate("chainmap_cancellation", config.scenarioTarget / 4, [&](int i) {
    auto rng = engineFor(config.seed, 0x77c0000 + i);
    SweepLine line;
    for (;;) {
      const auto ttilde = randomChainmapTtilde(config, rng);
      const int total = ttilde.l + ttilde.k - 1;
      const int maxParts = total / 2;
      if (maxParts < 2) continue;  // the T-side disk needs >= 2 negatives
      const int m = randomIn(rng, 2, std::min(maxParts, std::max(2, config.maxM)));
      std::vector<int> mi(m, 2);
      int excess = total - 2 * m;
      for (int part = 0; part < m && excess > 0; ++part) {
        const int add = randomIn(rng, 0, excess);
        mi[part] += add;
        excess -= add;
      }
      mi[m - 1] += excess;
      std::vector<int> b(m);
      for (auto& g : b) g = randomIn(rng, config.gradingMin, config.gradingMax);
      const auto t = makeChainmapTScenario(mi, b, ttilde.params);
      const auto verdict = chainmapCancellation(t, ttilde);
      line.params = fmt::format("{} | {}", t.describe(), ttilde.describe());
      line.ledger = verdict.requiredRelation;
      long long leibniz = 0;
      for (int idx = 1; idx < ttilde.j; ++idx) leibniz += ttilde.cGradings[idx - 1];
      line.closedForm = signPow(leibniz);
      line.ok = verdict.holds;
      if (!line.ok)
        line.detail = verdict.firstLedger.toString() + verdict.secondLedger.toString();
      return line;
    }
  });
}

SweepReport sweepTrivialCobordism(const SweepConfig& config) {
  struct Case {
    int grading, n, dA;
  };
  std::vector<Case> cases;
  for (int g = config.trivialGradingMin; g <= config.trivialGradingMax; ++g)
    for (int n : config.ns)
      for (int dA : {1, 2}) cases.push_back({g, n, dA});
  return evaluate("trivial_cobordism", int(cases.size()), [&](int i) {
    const auto [g, n, dA] = cases[i];
    const auto result = trivialCobordismSign(g, CappingSystemParams(n, dA));
    SweepLine line;
    line.params = fmt::format("|a|={} n={} dA={}", g, n, dA);
    line.ledger = result.sigmaParity == 0 ? Sign::plus() : Sign::minus();
    line.closedForm = Sign::plus();
    line.ok = result.matches;
    if (!line.ok) line.detail = result.ledger.toString();
    return line;
  });
}

SweepReport sweepCanonicalGluing(const SweepConfig& config) {
  return evaluate("canonical_gluing", 200, [&](int i) {
    auto rng = engineFor(config.seed, 0xc60000 + i);
    const int n = config.ns[rng() % config.ns.size()];
    const int cokerA = int(rng() % 3);
    const int cokerB = int(rng() % 3);
    ClosedDiskProblem a{n + cokerA, cokerA, (rng() % 2) ? Sign::plus() : Sign::minus()};
    ClosedDiskProblem b{n + cokerB, cokerB, (rng() % 2) ? Sign::plus() : Sign::minus()};
    const auto result = canonicalGluingCheck(a, b, n, rng());
    SweepLine line;
    line.params = fmt::format("n={} kerA={} cokA={} orientA={} kerB={} cokB={} orientB={}", n,
                              a.kerDim, a.cokerDim, a.orient.value(), b.kerDim, b.cokerDim,
                              b.orient.value());
    line.ledger = result.gluedOrient;
    line.closedForm = a.orient * b.orient;
    line.ok = result.matchesProduct;
    return line;
  });
}

std::vector<SweepReport> runAllSweeps(const SweepConfig& config) {
  std::vector<SweepReport> reports;
  reports.push_back(sweepConformal(config));
  reports.push_back(sweepDsquared(config));
  reports.push_back(sweepChainmapT(config));
  reports.push_back(sweepChainmapTtilde(config));
  reports.push_back(sweepDsquaredCancellation(config));
  reports.push_back(sweepChainmapCancellation(config));
  reports.push_back(sweepTrivialCobordism(config));
  reports.push_back(sweepCanonicalGluing(config));
  return reports;
}

std::string renderText(const std::vector<SweepReport>& reports) {
  std::ostringstream os;
  for (const auto& report : reports) {
    for (const auto& line : report.lines) {
      os << report.lemma << " | " << line.params << " | ledger=" << line.ledger
         << " closed=" << line.closedForm << " | " << (line.ok ? "ok" : "MISMATCH") << "\n";
    }
    os << report.lemma << ": " << report.passCount() << " passed, " << report.failCount()
       << " failed\n";
  }
  return os.str();
}

std::string renderSummary(const std::vector<SweepReport>& reports) {
  std::ostringstream os;
  int pass = 0, fail = 0;
  for (const auto& report : reports) {
    os << report.lemma << ".pass=" << report.passCount() << "\n";
    os << report.lemma << ".fail=" << report.failCount() << "\n";
    pass += report.passCount();
    fail += report.failCount();
  }
  os << "total.pass=" << pass << "\n";
  os << "total.fail=" << fail << "\n";
  os << "status=" << (fail == 0 ? "ok" : "fail") << "\n";
  return os.str();
}

bool allPassed(const std::vector<SweepReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const SweepReport& r) { return r.failCount() == 0; });
}

}  // namespace lch

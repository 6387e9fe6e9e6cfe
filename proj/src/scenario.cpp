#include "lch/scenario.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "lch/conformal.hpp"
#include "lch/exact_sequence.hpp"

namespace lch {

namespace {

int rep(long long v) { return int(((v % 2) + 2) % 2); }

int sumOf(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

}  // namespace

int FormalDiskOp::gradingSum() const { return sumOf(negGradings); }

int FormalDiskOp::formalDimension() const {
  const int drop = (setting == DiskSetting::Cobordism) ? 0 : 1;
  return posGrading - gradingSum() - drop;
}

bool FormalDiskOp::rigidityHolds() const { return !rigid || formalDimension() == 0; }

int FormalDiskOp::kerDim() const { return setting == DiskSetting::Symplectization ? 1 : 0; }

int FormalDiskOp::cokerDim() const {
  if (negativeCount() < 2)
    throw std::logic_error("FormalDiskOp: cokernel bookkeeping needs >= 2 negative punctures");
  return negativeCount() - 2;
}

Sign SignLedger::total() const {
  Sign s;
  for (const auto& step : steps) s *= step.sign;
  return s;
}

void SignLedger::append(const SignLedger& other) {
  steps.insert(steps.end(), other.steps.begin(), other.steps.end());
}

std::string SignLedger::toString() const {
  std::ostringstream os;
  for (const auto& step : steps) os << "  " << step.name << ": " << step.sign << "\n";
  os << "  total: " << total() << "\n";
  return os.str();
}

std::string GluingScenario::describe() const {
  switch (variant) {
    case ScenarioVariant::DSquared:
      return fmt::format("dsquared m={} k={} r={} b={} f={} n={} dA={}", m, k, r,
                         fmt::join(bGradings, ","), fmt::join(fGradings, ","), params.n,
                         params.dA);
    case ScenarioVariant::ChainmapT:
      return fmt::format("chainmap_T m={} mi={} b={} n={} dA={}", m, fmt::join(mi, ","),
                         fmt::join(bGradings, ","), params.n, params.dA);
    case ScenarioVariant::ChainmapTtilde:
      return fmt::format("chainmap_Ttilde l={} k={} j={} c={} f={} n={} dA={}", l, k, j,
                         fmt::join(cGradings, ","), fmt::join(fGradings, ","), params.n,
                         params.dA);
    case ScenarioVariant::TrivialConcat:
      return fmt::format("trivial |a|={} n={} dA={}", aGrading, params.n, params.dA);
  }
  return "unknown";
}

GluingScenario makeDSquaredScenario(int m, int k, int r, std::vector<int> bGradingsFree,
                                    std::vector<int> fGradings, CappingSystemParams params) {
  if (m <= 2) throw std::invalid_argument("dsquared scenario: need m > 2");
  if (r <= 1) throw std::invalid_argument("dsquared scenario: need r > 1");
  if (k < 1 || k > r) throw std::invalid_argument("dsquared scenario: k out of range");
  if (int(fGradings.size()) != m - 1)
    throw std::invalid_argument("dsquared scenario: need m-1 inner-negative gradings");
  if (int(bGradingsFree.size()) != r - 1)
    throw std::invalid_argument("dsquared scenario: need r-1 free outer gradings");

  GluingScenario s;
  s.variant = ScenarioVariant::DSquared;
  s.params = params;
  s.m = m;
  s.k = k;
  s.r = r;
  s.fGradings = std::move(fGradings);
  // Rigidity of the inner disk pins |b_k|; rigidity of the outer disk pins |a|.
  s.bGradings = std::move(bGradingsFree);
  s.bGradings.insert(s.bGradings.begin() + (k - 1), sumOf(s.fGradings) + 1);
  s.aGrading = sumOf(s.bGradings) + 1;
  return s;
}

GluingScenario makeChainmapTScenario(std::vector<int> mi, std::vector<int> bGradings,
                                     CappingSystemParams params) {
  if (mi.size() != bGradings.size() || mi.empty())
    throw std::invalid_argument("chainmap_T scenario: need matching mi and gradings");
  for (int count : mi)
    if (count <= 1)
      throw std::invalid_argument("chainmap_T scenario: every v_i needs m_i > 1");
  GluingScenario s;
  s.variant = ScenarioVariant::ChainmapT;
  s.params = params;
  s.m = int(mi.size());
  s.mi = std::move(mi);
  s.bGradings = std::move(bGradings);
  s.aGrading = sumOf(s.bGradings) + 1;
  return s;
}

GluingScenario makeChainmapTtildeScenario(int j, std::vector<int> cGradingsFree,
                                          std::vector<int> fGradings,
                                          CappingSystemParams params) {
  const int l = int(cGradingsFree.size()) + 1;
  const int k = int(fGradings.size());
  if (l < 2 || k < 2)
    throw std::invalid_argument("chainmap_Ttilde scenario: both disks need >= 2 negatives");
  if (j < 1 || j > l) throw std::invalid_argument("chainmap_Ttilde scenario: j out of range");
  GluingScenario s;
  s.variant = ScenarioVariant::ChainmapTtilde;
  s.params = params;
  s.l = l;
  s.k = k;
  s.j = j;
  s.fGradings = std::move(fGradings);
  s.cGradings = std::move(cGradingsFree);
  s.cGradings.insert(s.cGradings.begin() + (j - 1), sumOf(s.fGradings) + 1);
  s.aGrading = sumOf(s.cGradings);
  return s;
}

namespace {

// A summand column under rearrangement, recording every move in a ledger.
class Workspace {
 public:
  Workspace(SummandColumn column, SignLedger& ledger)
      : column_(std::move(column)), ledger_(ledger) {}

  const SummandColumn& column() const { return column_; }

  Sign moveTo(const std::string& stepName, std::vector<std::string> target) {
    const auto dims = column_.dims();
    auto [reordered, sign] = blockReorderSign(column_, target);
    std::vector<int> perm;
    perm.reserve(target.size());
    for (const auto& label : target) perm.push_back(column_.indexOf(label));
    ledger_.append({stepName, sign, dims, std::move(perm)});
    column_ = std::move(reordered);
    return sign;
  }

  Sign moveLabelAfter(const std::string& stepName, const std::string& label,
                      const std::string& afterLabel) {
    auto order = column_.labels();
    order.erase(order.begin() + column_.indexOf(label));
    auto anchor = std::find(order.begin(), order.end(), afterLabel);
    if (anchor == order.end())
      throw std::invalid_argument("Workspace: unknown anchor '" + afterLabel + "'");
    order.insert(anchor + 1, label);
    return moveTo(stepName, std::move(order));
  }

  Sign moveLabelToFront(const std::string& stepName, const std::string& label) {
    auto order = column_.labels();
    order.erase(order.begin() + column_.indexOf(label));
    order.insert(order.begin(), label);
    return moveTo(stepName, std::move(order));
  }

  Sign moveLabelToEnd(const std::string& stepName, const std::string& label) {
    auto order = column_.labels();
    order.erase(order.begin() + column_.indexOf(label));
    order.push_back(label);
    return moveTo(stepName, std::move(order));
  }

  Sign swapLabels(const std::string& stepName, const std::string& a, const std::string& b) {
    auto order = column_.labels();
    const int ia = column_.indexOf(a);
    const int ib = column_.indexOf(b);
    std::swap(order[ia], order[ib]);
    return moveTo(stepName, std::move(order));
  }

  // Removes the last summand; the caller has arranged that it is one half
  // of an identity-matched pair sitting at the tails of both middle
  // columns, which the orientation convention lets us drop for free.
  void dropTail(const std::string& label) {
    if (column_.empty() || column_.summands().back().label != label)
      throw std::logic_error("Workspace::dropTail: '" + label + "' is not at the tail");
    auto summands = column_.summands();
    summands.pop_back();
    column_ = SummandColumn(std::move(summands), column_.sign());
  }

  void expectOrder(const std::vector<std::string>& labels, const char* context) const {
    if (column_.labels() != labels)
      throw std::logic_error(std::string("scenario assembly out of order in ") + context);
  }

 private:
  SummandColumn column_;
  SignLedger& ledger_;
};

FormalSummand block(std::string label, long long dimParityOf) {
  return {std::move(label), rep(dimParityOf), Sign::plus()};
}

FormalSummand unitBlock(std::string label) { return {std::move(label), 1, Sign::plus()}; }

}  // namespace

RearrangementResult dsquaredRearrangementSign(const GluingScenario& s) {
  if (s.variant != ScenarioVariant::DSquared)
    throw std::invalid_argument("dsquaredRearrangementSign: wrong variant");
  if (s.m <= 2 || s.r <= 1 || s.k < 1 || s.k > s.r)
    throw std::invalid_argument("dsquaredRearrangementSign: parameter constraints violated");
  if (int(s.fGradings.size()) != s.m - 1 || int(s.bGradings.size()) != s.r)
    throw std::invalid_argument("dsquaredRearrangementSign: grading lists have wrong length");
  const int n = s.params.n, dA = s.params.dA;
  if (s.bGradings[s.k - 1] != sumOf(s.fGradings) + 1 ||
      s.aGrading != sumOf(s.bGradings) + 1)
    throw std::invalid_argument("dsquaredRearrangementSign: rigidity constraints violated");

  const auto kerB = [&](int i) { return fmt::format("Ker(b{},-)", i); };
  const auto cokB = [&](int i) { return fmt::format("Coker(b{},-)", i); };
  const auto kerF = [&](int i) { return fmt::format("Ker(f{},-)", i); };
  const auto cokF = [&](int i) { return fmt::format("Coker(f{},-)", i); };

  RearrangementResult result;
  SignLedger& ledger = result.ledger;

  // Sequence obtained by gluing the two fully capped problems.
  std::vector<FormalSummand> k1{unitBlock("Rt(u2)")};
  for (int i = s.r; i >= 1; --i) k1.push_back(unitBlock(kerB(i)));
  k1.push_back(unitBlock("Rt(u1)"));
  for (int i = s.m - 1; i >= 1; --i) k1.push_back(unitBlock(kerF(i)));

  std::vector<FormalSummand> c1{block("Coker(u2)", s.r - 2),
                                block("Coker(a,+)", s.aGrading + n + dA + 1)};
  for (int i = s.r; i >= 1; --i) c1.push_back(block(cokB(i), s.bGradings[i - 1]));
  c1.push_back(unitBlock("Rt(glue)"));
  c1.push_back(block("R^(n+dA)", n + dA));
  c1.push_back(block("Coker(u1)", s.m - 3));
  c1.push_back(block("Coker(bk,+)", s.bGradings[s.k - 1] + n + dA + 1));
  for (int i = s.m - 1; i >= 1; --i) c1.push_back(block(cokF(i), s.fGradings[i - 1]));

  // Sequence obtained by gluing the capped glued disk to the glued capping
  // disk at b_k.
  std::vector<FormalSummand> k2{unitBlock("Rt(u2)"), unitBlock("Rt(u1)")};
  for (int i = s.r; i > s.k; --i) k2.push_back(unitBlock(kerB(i)));
  for (int i = s.m - 1; i >= 1; --i) k2.push_back(unitBlock(kerF(i)));
  for (int i = s.k - 1; i >= 1; --i) k2.push_back(unitBlock(kerB(i)));
  k2.push_back(unitBlock("Rt(cap)"));
  k2.push_back(unitBlock(kerB(s.k)));

  std::vector<FormalSummand> c2{block("Coker(u2)", s.r - 2), unitBlock("Rt(glue)"),
                                block("Coker(u1)", s.m - 3),
                                block("Coker(a,+)", s.aGrading + n + dA + 1)};
  for (int i = s.r; i > s.k; --i) c2.push_back(block(cokB(i), s.bGradings[i - 1]));
  for (int i = s.m - 1; i >= 1; --i) c2.push_back(block(cokF(i), s.fGradings[i - 1]));
  for (int i = s.k - 1; i >= 1; --i) c2.push_back(block(cokB(i), s.bGradings[i - 1]));
  c2.push_back(unitBlock("Rt(capglue)"));
  c2.push_back(block("R^(n+dA)", n + dA));
  c2.push_back(block("Coker(bk,+)", s.bGradings[s.k - 1] + n + dA + 1));
  c2.push_back(block(cokB(s.k), s.bGradings[s.k - 1]));

  Workspace kernels(SummandColumn(std::move(k1)), ledger);
  Workspace cokernels(SummandColumn(std::move(c1)), ledger);
  Workspace kernelsTarget(SummandColumn(std::move(k2)), ledger);
  Workspace cokernelsTarget(SummandColumn(std::move(c2)), ledger);

  // The translation summands of the glued capping disk cancel against the
  // gluing cokernel once both sit at the tails.
  kernelsTarget.moveLabelToEnd("capping disk R_t to tail (kernel)", "Rt(cap)");
  kernelsTarget.dropTail("Rt(cap)");
  cokernelsTarget.moveLabelToEnd("capping disk R_t to tail (cokernel)", "Rt(capglue)");
  cokernelsTarget.dropTail("Rt(capglue)");

  // sigma1: line the translation kernels up and pull the gluing cokernel up
  // under Coker(u2).
  kernels.moveLabelAfter("sigma1: align Rt(u1)", "Rt(u1)", "Rt(u2)");
  cokernels.moveLabelAfter("sigma1: align Rt(glue)", "Rt(glue)", "Coker(u2)");

  // Even-dimensional move of Coker(u1); costs nothing by rigidity.
  cokernels.moveLabelAfter("move Coker(u1) up", "Coker(u1)", "Rt(glue)");

  // sigma2 / sigma3: exchange the inner disk's capping blocks with the
  // glued chord's, kernels then cokernels.
  kernels.moveTo("sigma2: kernel capping exchange", kernelsTarget.column().labels());
  cokernels.moveTo("sigma3: cokernel capping exchange", cokernelsTarget.column().labels());

  kernels.expectOrder(kernelsTarget.column().labels(), "dsquared kernels");
  cokernels.expectOrder(cokernelsTarget.column().labels(), "dsquared cokernels");

  // The second sequence hangs off the glued capping disk at b_k, which
  // carries (-1)^{|b_k|+n+dA+1} against the canonical orientation.
  ledger.append({"glued capping disk at b_k",
                 gluedCappingSign(s.bGradings[s.k - 1], s.params),
                 {},
                 {}});

  result.total = ledger.total();
  long long closed = (long long)s.m * s.k + s.r + 1;
  for (int i = 1; i < s.k; ++i) closed += s.bGradings[i - 1];
  result.closedForm = signPow(closed);
  result.matches = (result.total == result.closedForm);
  return result;
}

ChainmapResult chainmapTSign(const GluingScenario& s) {
  if (s.variant != ScenarioVariant::ChainmapT)
    throw std::invalid_argument("chainmapTSign: wrong variant");
  const int m = s.m;
  if (m < 2 || int(s.mi.size()) != m || int(s.bGradings.size()) != m)
    throw std::invalid_argument("chainmapTSign: need at least two negative punctures on u0");
  for (int count : s.mi)
    if (count <= 1) throw std::invalid_argument("chainmapTSign: every m_i must exceed 1");
  if (s.aGrading != sumOf(s.bGradings) + 1)
    throw std::invalid_argument("chainmapTSign: rigidity constraint violated");
  const int n = s.params.n, dA = s.params.dA;

  const auto kerB = [&](int i, char sgn) { return fmt::format("Ker(b{},{})", i, sgn); };
  const auto cokB = [&](int i, char sgn) { return fmt::format("Coker(b{},{})", i, sgn); };

  ChainmapResult out;
  SignLedger& ledger = out.rearrangement.ledger;

  // Gluing of the fully capped u0 to the fully capped v_i.
  std::vector<FormalSummand> k1{unitBlock("Rt(u0)"), block("Ker(a,+)", 0)};
  for (int i = m; i >= 1; --i) k1.push_back(unitBlock(kerB(i, '-')));
  for (int i = m; i >= 1; --i) {
    k1.push_back(block(fmt::format("Ker(v{})", i), 0));
    k1.push_back(block(kerB(i, '+'), 0));
    k1.push_back(block(fmt::format("Kcap(v{})", i), s.mi[i - 1]));
  }

  std::vector<FormalSummand> c1{block("Coker(u0)", m - 2),
                                block("Coker(a,+)", s.aGrading + n + dA + 1)};
  for (int i = m; i >= 1; --i) c1.push_back(block(cokB(i, '-'), s.bGradings[i - 1]));
  for (int i = m; i >= 1; --i) {
    c1.push_back(unitBlock(fmt::format("Rt(glue{})", i)));
    c1.push_back(block(fmt::format("R^(n+dA){}", i), n + dA));
    c1.push_back(block(fmt::format("Coker(v{})", i), s.mi[i - 1] - 2));
    c1.push_back(block(cokB(i, '+'), s.bGradings[i - 1] + n + dA + 1));
    c1.push_back(block(fmt::format("Ccap(v{})", i), s.bGradings[i - 1]));
  }

  // Gluing of the capped glued disk to the glued capping disks at the b_i.
  std::vector<FormalSummand> k2{unitBlock("Rt(u0)")};
  for (int i = m; i >= 1; --i) k2.push_back(block(fmt::format("Ker(v{})", i), 0));
  k2.push_back(block("Ker(a,+)", 0));
  for (int i = m; i >= 1; --i) k2.push_back(block(fmt::format("Kcap(v{})", i), s.mi[i - 1]));
  for (int i = m; i >= 1; --i) {
    k2.push_back(block(kerB(i, '+'), 0));
    k2.push_back(unitBlock(fmt::format("Rt(cap{})", i)));
    k2.push_back(unitBlock(kerB(i, '-')));
  }

  std::vector<FormalSummand> c2{block("Coker(u0)", m - 2)};
  for (int i = m; i >= 1; --i) {
    c2.push_back(unitBlock(fmt::format("Rt(glue{})", i)));
    c2.push_back(block(fmt::format("Coker(v{})", i), s.mi[i - 1] - 2));
  }
  c2.push_back(block("Coker(a,+)", s.aGrading + n + dA + 1));
  for (int i = m; i >= 1; --i) c2.push_back(block(fmt::format("Ccap(v{})", i), s.bGradings[i - 1]));
  for (int i = m; i >= 1; --i) {
    c2.push_back(unitBlock(fmt::format("Rt(capglue{})", i)));
    c2.push_back(block(fmt::format("R^(n+dA){}", i), n + dA));
    c2.push_back(block(cokB(i, '+'), s.bGradings[i - 1] + n + dA + 1));
    c2.push_back(block(cokB(i, '-'), s.bGradings[i - 1]));
  }

  Workspace kernels(SummandColumn(std::move(k1)), ledger);
  Workspace cokernels(SummandColumn(std::move(c1)), ledger);
  Workspace kernelsTarget(SummandColumn(std::move(k2)), ledger);
  Workspace cokernelsTarget(SummandColumn(std::move(c2)), ledger);

  // Remove the matched translation pairs of the glued capping disks,
  // innermost first.
  for (int i = 1; i <= m; ++i) {
    kernelsTarget.moveLabelToEnd(fmt::format("capping disk R_t to tail (kernel, b{})", i),
                                 fmt::format("Rt(cap{})", i));
    kernelsTarget.dropTail(fmt::format("Rt(cap{})", i));
    cokernelsTarget.moveLabelToEnd(fmt::format("capping disk R_t to tail (cokernel, b{})", i),
                                   fmt::format("Rt(capglue{})", i));
    cokernelsTarget.dropTail(fmt::format("Rt(capglue{})", i));
  }

  // sigma1: exchange each negative capping kernel of u0 with the capping
  // kernels of the corresponding v_i.
  for (int i = m; i >= 1; --i)
    kernels.swapLabels(fmt::format("sigma1: Ker(b{},-) <-> Kcap(v{})", i, i), kerB(i, '-'),
                       fmt::format("Kcap(v{})", i));
  kernels.moveTo("align zero-dimensional kernels", kernelsTarget.column().labels());

  // sigma2: pull each gluing cokernel and Coker(v_i) up under Coker(u0).
  std::string anchor = "Coker(u0)";
  for (int i = m; i >= 1; --i) {
    const auto rt = fmt::format("Rt(glue{})", i);
    const auto cv = fmt::format("Coker(v{})", i);
    cokernels.moveLabelAfter(fmt::format("sigma2: raise {}", rt), rt, anchor);
    cokernels.moveLabelAfter(fmt::format("sigma2: raise {}", cv), cv, rt);
    anchor = cv;
  }

  // sigma3: exchange each negative capping cokernel of u0 with the capping
  // cokernels of the corresponding v_i.
  for (int i = m; i >= 1; --i)
    cokernels.swapLabels(fmt::format("sigma3: Coker(b{},-) <-> Ccap(v{})", i, i), cokB(i, '-'),
                         fmt::format("Ccap(v{})", i));

  kernels.expectOrder(kernelsTarget.column().labels(), "chainmap_T kernels");
  cokernels.expectOrder(cokernelsTarget.column().labels(), "chainmap_T cokernels");

  out.rearrangement.total = ledger.total();
  long long closed = 0;
  for (int i = 1; i <= m; ++i)
    closed += (long long)i * (s.mi[i - 1] + 1) + (s.bGradings[i - 1] + n + dA + 1);
  out.rearrangement.closedForm = signPow(closed);
  out.rearrangement.matches = (out.rearrangement.total == out.rearrangement.closedForm);

  // Boundary orientation: start from the permutation sign, normalize the
  // iterated gluing cokernels, account for the symplectization wedge of u0
  // and the glued capping disks, and compose the conformal factors.
  SignLedger& boundary = out.boundaryLedger;
  boundary.append({"rearrangement total", out.rearrangement.total, {}, {}});

  {
    std::vector<FormalSummand> h{block("Coker(u0)", m - 2)};
    for (int i = m; i >= 1; --i) {
      h.push_back(unitBlock(fmt::format("Rt(glue{})", i)));
      h.push_back(block(fmt::format("Coker(v{})", i), s.mi[i - 1] - 2));
    }
    Workspace iterated(SummandColumn(std::move(h)), boundary);
    for (int i = m; i >= 1; --i)
      iterated.moveLabelAfter(fmt::format("nu0: Rt(glue{}) past Coker(v{})", i, i),
                              fmt::format("Rt(glue{})", i), fmt::format("Coker(v{})", i));
    // The translation kernel maps to minus each gluing cokernel.
    boundary.append({"nu0: translation normal form", Sign::minus(), {}, {}});
  }

  boundary.append({"index factor of u0", signPow(m), {}, {}});
  for (int i = 1; i <= m; ++i)
    boundary.append({fmt::format("glued capping disk at b{}", i),
                     gluedCappingSign(s.bGradings[i - 1], s.params),
                     {},
                     {}});
  for (int i = 1; i <= m; ++i)
    boundary.append({fmt::format("nu2: conformal factor for v{}", i),
                     signPow((long long)(s.mi[i - 1] - 1) * i + 1),
                     {},
                     {}});

  out.boundarySign = boundary.total();
  out.boundaryClosedForm = signPow(1 + sumOf(s.mi));
  out.boundaryMatches = (out.boundarySign == out.boundaryClosedForm);
  std::string tokens = "eps0";
  for (int i = 1; i <= m; ++i) tokens += fmt::format("*mu{}", i);
  out.boundaryTokens = std::move(tokens);
  return out;
}

ChainmapResult chainmapTtildeSign(const GluingScenario& s) {
  if (s.variant != ScenarioVariant::ChainmapTtilde)
    throw std::invalid_argument("chainmapTtildeSign: wrong variant");
  const int l = s.l, k = s.k, j = s.j;
  if (l < 2 || k < 2 || j < 1 || j > l)
    throw std::invalid_argument("chainmapTtildeSign: parameter constraints violated");
  if (int(s.cGradings.size()) != l || int(s.fGradings.size()) != k)
    throw std::invalid_argument("chainmapTtildeSign: grading lists have wrong length");
  if (s.cGradings[j - 1] != sumOf(s.fGradings) + 1 || s.aGrading != sumOf(s.cGradings))
    throw std::invalid_argument("chainmapTtildeSign: rigidity constraints violated");
  const int n = s.params.n, dA = s.params.dA;

  const auto kerC = [&](int i, char sgn) { return fmt::format("Ker(c{},{})", i, sgn); };
  const auto cokC = [&](int i, char sgn) { return fmt::format("Coker(c{},{})", i, sgn); };

  ChainmapResult out;
  SignLedger& ledger = out.rearrangement.ledger;

  std::vector<FormalSummand> k1{block("Ker(v0)", 0), block("Ker(a,+)", 0)};
  for (int i = l; i >= 1; --i) k1.push_back(unitBlock(kerC(i, '-')));
  k1.push_back(unitBlock("Rt(uj)"));
  k1.push_back(block(kerC(j, '+'), 0));
  k1.push_back(block("Kcap(uj)", k));

  std::vector<FormalSummand> c1{block("Coker(v0)", l - 2),
                                block("Coker(a,+)", s.aGrading + n + dA + 1)};
  for (int i = l; i >= 1; --i) c1.push_back(block(cokC(i, '-'), s.cGradings[i - 1]));
  c1.push_back(unitBlock("Rt(glue)"));
  c1.push_back(block("R^(n+dA)", n + dA));
  c1.push_back(block("Coker(uj)", k - 2));
  c1.push_back(block(cokC(j, '+'), s.cGradings[j - 1] + n + dA + 1));
  c1.push_back(block("Ccap(uj)", sumOf(s.fGradings)));

  std::vector<FormalSummand> k2{block("Ker(v0)", 0), unitBlock("Rt(uj)"),
                                block("Ker(a,+)", 0)};
  for (int i = l; i > j; --i) k2.push_back(unitBlock(kerC(i, '-')));
  k2.push_back(block("Kcap(uj)", k));
  for (int i = j - 1; i >= 1; --i) k2.push_back(unitBlock(kerC(i, '-')));
  k2.push_back(block(kerC(j, '+'), 0));
  k2.push_back(unitBlock("Rt(cap)"));
  k2.push_back(unitBlock(kerC(j, '-')));

  std::vector<FormalSummand> c2{block("Coker(v0)", l - 2), unitBlock("Rt(glue)"),
                                block("Coker(uj)", k - 2),
                                block("Coker(a,+)", s.aGrading + n + dA + 1)};
  for (int i = l; i > j; --i) c2.push_back(block(cokC(i, '-'), s.cGradings[i - 1]));
  c2.push_back(block("Ccap(uj)", sumOf(s.fGradings)));
  for (int i = j - 1; i >= 1; --i) c2.push_back(block(cokC(i, '-'), s.cGradings[i - 1]));
  c2.push_back(unitBlock("Rt(capglue)"));
  c2.push_back(block("R^(n+dA)", n + dA));
  c2.push_back(block(cokC(j, '+'), s.cGradings[j - 1] + n + dA + 1));
  c2.push_back(block(cokC(j, '-'), s.cGradings[j - 1]));

  Workspace kernels(SummandColumn(std::move(k1)), ledger);
  Workspace cokernels(SummandColumn(std::move(c1)), ledger);
  Workspace kernelsTarget(SummandColumn(std::move(k2)), ledger);
  Workspace cokernelsTarget(SummandColumn(std::move(c2)), ledger);

  kernelsTarget.moveLabelToEnd("capping disk R_t to tail (kernel)", "Rt(cap)");
  kernelsTarget.dropTail("Rt(cap)");
  cokernelsTarget.moveLabelToEnd("capping disk R_t to tail (cokernel)", "Rt(capglue)");
  cokernelsTarget.dropTail("Rt(capglue)");

  kernels.moveLabelAfter("sigma0: raise Rt(uj)", "Rt(uj)", "Ker(v0)");
  kernels.moveTo("sigma1: kernel capping exchange", kernelsTarget.column().labels());
  cokernels.moveLabelAfter("sigma2: raise Rt(glue)", "Rt(glue)", "Coker(v0)");
  cokernels.moveLabelAfter("sigma2: raise Coker(uj)", "Coker(uj)", "Rt(glue)");
  cokernels.moveTo("sigma3: cokernel capping exchange", cokernelsTarget.column().labels());

  kernels.expectOrder(kernelsTarget.column().labels(), "chainmap_Ttilde kernels");
  cokernels.expectOrder(cokernelsTarget.column().labels(), "chainmap_Ttilde cokernels");

  out.rearrangement.total = ledger.total();
  long long closed = (long long)s.cGradings[j - 1] + n + dA + 1 + (long long)j * (k + 1) + k + l;
  for (int i = 1; i < j; ++i) closed += s.cGradings[i - 1];
  out.rearrangement.closedForm = signPow(closed);
  out.rearrangement.matches = (out.rearrangement.total == out.rearrangement.closedForm);

  SignLedger& boundary = out.boundaryLedger;
  boundary.append({"rearrangement total", out.rearrangement.total, {}, {}});
  {
    std::vector<FormalSummand> h{block("Coker(v0)", l - 2), unitBlock("Rt(glue)"),
                                 block("Coker(uj)", k - 2)};
    Workspace simple(SummandColumn(std::move(h)), boundary);
    simple.moveLabelAfter("sigma0~: Rt(glue) past Coker(uj)", "Rt(glue)", "Coker(uj)");
  }
  boundary.append({"index factor of uj", signPow(k), {}, {}});
  boundary.append({"glued capping disk at c_j",
                   gluedCappingSign(s.cGradings[j - 1], s.params),
                   {},
                   {}});
  boundary.append(
      {"conformal factor", signPow((long long)(k - 1) * j + 1), {}, {}});

  out.boundarySign = boundary.total();
  long long closedBoundary = 1 + l + k;
  for (int i = 1; i < j; ++i) closedBoundary += s.cGradings[i - 1];
  out.boundaryClosedForm = signPow(closedBoundary);
  out.boundaryMatches = (out.boundarySign == out.boundaryClosedForm);
  out.boundaryTokens = fmt::format("mu0*eps{}", j);
  return out;
}

CancellationResult dsquaredBoundaryCancellation(const std::vector<int>& wordGradings,
                                                BrokenConfig first, BrokenConfig second,
                                                CappingSystemParams params) {
  const int l = int(wordGradings.size());
  auto buildSide = [&](const BrokenConfig& config, SignLedger& ledger) -> Sign {
    const int width = config.innerNegatives;  // negatives of the inner disk
    const int k = config.k;
    if (width < 2) throw std::invalid_argument("broken configuration: inner disk too small");
    if (k < 1 || k + width - 1 > l)
      throw std::invalid_argument("broken configuration does not fit the word");
    std::vector<int> fGradings(wordGradings.begin() + (k - 1),
                               wordGradings.begin() + (k - 1) + width);
    std::vector<int> bFree(wordGradings.begin(), wordGradings.begin() + (k - 1));
    bFree.insert(bFree.end(), wordGradings.begin() + (k - 1) + width, wordGradings.end());
    const int r = l - width + 1;
    if (r < 2) throw std::invalid_argument("broken configuration: outer disk too small");
    const int m = width + 1;

    GluingScenario scenario = makeDSquaredScenario(m, k, r, bFree, fGradings, params);
    const auto rearranged = dsquaredRearrangementSign(scenario);
    ledger.append(rearranged.ledger);

    // Normalization of the plain gluing sequence: the gluing cokernel moves
    // past Coker(u1) and cancels the inner translation kernel.
    {
      std::vector<FormalSummand> cols{block("Coker(u2)", r - 2), unitBlock("Rt(glue)"),
                                      block("Coker(u1)", m - 3)};
      Workspace nyc(SummandColumn(std::move(cols)), ledger);
      nyc.moveLabelAfter("sigma0: Rt(glue) past Coker(u1)", "Rt(glue)", "Coker(u1)");
    }

    // Conformal contribution of the corner: the inner disk has m-1
    // negatives and attaches at the k-th puncture of the outer disk.
    const auto conformal = conformalGlueSign(m - 1, r, k);
    ledger.append({"nu1: conformal gluing",
                   conformal.agree ? conformal.ledger : conformal.closedForm,
                   {},
                   {}});
    return ledger.total();
  };

  CancellationResult result;
  const Sign e1 = buildSide(first, result.firstLedger);
  const Sign e2 = buildSide(second, result.secondLedger);

  // The two ends of the interval carry opposite boundary orientations:
  // (-1)^{e1} mu1 mu2 = -(-1)^{e2} mu1' mu2'.
  result.requiredRelation = Sign::minus() * e1 * e2;

  // Which is exactly the claimed identity when each side reduces to
  // 1 + sum_{i<k}|d_i| + delta.
  auto expectedExponent = [&](const BrokenConfig& config) {
    long long e = 1;
    for (int i = 1; i < config.k; ++i) e += wordGradings[i - 1];
    const int width = config.innerNegatives;
    const int r = l - width + 1;
    e += rep(width - 2) + rep(r - 2) + 1;  // delta in the symplectization
    return e;
  };
  const bool firstOk = (e1 == signPow(expectedExponent(first)));
  const bool secondOk = (e2 == signPow(expectedExponent(second)));
  long long claimed = 1;
  for (int i = 1; i < first.k; ++i) claimed += wordGradings[i - 1];
  for (int i = 1; i < second.k; ++i) claimed += wordGradings[i - 1];
  result.holds = firstOk && secondOk && (result.requiredRelation == signPow(claimed));
  return result;
}

CancellationResult chainmapCancellation(const GluingScenario& tScenario,
                                        const GluingScenario& ttildeScenario) {
  if (tScenario.variant != ScenarioVariant::ChainmapT ||
      ttildeScenario.variant != ScenarioVariant::ChainmapTtilde)
    throw std::invalid_argument("chainmapCancellation: wrong variants");
  if (!(tScenario.params == ttildeScenario.params))
    throw std::invalid_argument("chainmapCancellation: mismatched capping parameters");
  if (sumOf(tScenario.mi) != ttildeScenario.l + ttildeScenario.k - 1)
    throw std::invalid_argument("chainmapCancellation: the two buildings glue to different words");

  const auto tSide = chainmapTSign(tScenario);
  const auto ttSide = chainmapTtildeSign(ttildeScenario);

  CancellationResult result;
  result.firstLedger = tSide.boundaryLedger;
  result.secondLedger = ttSide.boundaryLedger;
  // (-1)^{e_T} eps0 mu... = -(-1)^{e_Ttilde} mu0 eps_j.
  result.requiredRelation = Sign::minus() * tSide.boundarySign * ttSide.boundarySign;
  long long leibniz = 0;
  for (int i = 1; i < ttildeScenario.j; ++i) leibniz += ttildeScenario.cGradings[i - 1];
  result.holds = tSide.boundaryMatches && ttSide.boundaryMatches &&
                 (result.requiredRelation == signPow(leibniz));
  return result;
}

TrivialCobordismResult trivialCobordismSign(int grading, CappingSystemParams params) {
  const int n = params.n, dA = params.dA;
  TrivialCobordismResult out;
  SignLedger& ledger = out.ledger;

  // Orientation of the concatenated strip's kernel induced by the
  // concatenation sequence: independent of the capping sign of the factors.
  {
    ExactSequenceData concat;
    concat.v1 = SummandColumn({{"Ker(u)", 1, Sign::plus()}});
    concat.w1 = SummandColumn({{"Ker(u1)", 1, Sign::plus()}, {"Ker(u2)", 1, Sign::plus()}});
    concat.w2 = SummandColumn({{"Rt", 1, Sign::plus()}});
    concat.alpha = {{"Ker(u)", "Ker(u1)", Sign::plus()}};
    concat.beta = {{"Ker(u2)", "Rt", Sign::plus()}};
    for (Sign sigma : {Sign::plus(), Sign::minus()}) {
      // Both kernels carry the strip's capping sign, so it cancels.
      const Sign induced =
          exactSequenceTransportToV1(concat, sigma * sigma, Sign::plus(), Sign::plus());
      if (induced != Sign::plus())
        throw std::logic_error("trivialCobordismSign: concatenation sequence misbehaved");
    }
    ledger.append({"concatenation induces +R_t on Ker(u)", Sign::plus(), {}, {}});
  }

  const int p = rep(grading + n + dA + 1);
  const int q = rep(grading);

  std::vector<FormalSummand> k1{unitBlock("Ker(u1)"), block("Ker(a,+,h)", 0),
                                unitBlock("Ker(a,-,m)"), unitBlock("Ker(u2)"),
                                block("Ker(a,+,m)", 0), unitBlock("Ker(a,-,l)")};
  std::vector<FormalSummand> c1{block("Coker(a,+,h)", p), block("Coker(a,-,m)", q),
                                unitBlock("Rt(glue)"),    block("R^(n+dA)", n + dA),
                                block("Coker(a,+,m)", p), block("Coker(a,-,l)", q)};
  std::vector<FormalSummand> k2{unitBlock("Ker(u1)"),     unitBlock("Ker(u2)"),
                                block("Ker(a,+,h)", 0),   unitBlock("Ker(a,-,l)"),
                                block("Ker(a,+,m)", 0),   unitBlock("Rt(cap)"),
                                unitBlock("Ker(a,-,m)")};
  std::vector<FormalSummand> c2{unitBlock("Rt(glue)"),    block("Coker(a,+,h)", p),
                                block("Coker(a,-,l)", q), unitBlock("Rt(capglue)"),
                                block("R^(n+dA)", n + dA), block("Coker(a,+,m)", p),
                                block("Coker(a,-,m)", q)};

  Workspace kernels(SummandColumn(std::move(k1)), ledger);
  Workspace cokernels(SummandColumn(std::move(c1)), ledger);
  Workspace kernelsTarget(SummandColumn(std::move(k2)), ledger);
  Workspace cokernelsTarget(SummandColumn(std::move(c2)), ledger);

  kernelsTarget.moveLabelToEnd("capping disk R_t to tail (kernel)", "Rt(cap)");
  kernelsTarget.dropTail("Rt(cap)");
  cokernelsTarget.moveLabelToEnd("capping disk R_t to tail (cokernel)", "Rt(capglue)");
  cokernelsTarget.dropTail("Rt(capglue)");

  kernels.moveLabelAfter("sigma1: raise Ker(u2)", "Ker(u2)", "Ker(u1)");
  cokernels.moveLabelToFront("sigma1: raise Rt(glue)", "Rt(glue)");
  kernels.moveTo("sigma1: exchange middle and low caps (kernel)",
                 kernelsTarget.column().labels());
  cokernels.moveTo("sigma1: exchange middle and low caps (cokernel)",
                   cokernelsTarget.column().labels());

  kernels.expectOrder(kernelsTarget.column().labels(), "trivial cobordism kernels");
  cokernels.expectOrder(cokernelsTarget.column().labels(), "trivial cobordism cokernels");

  // The lower part of the rearranged sequence is the glued capping disk at
  // a, oriented (-1)^{|a|+n+dA+1} against canonical; composing it with the
  // mechanical sigma_1 must close the loop, forcing sigma = 0.
  ledger.append({"glued capping disk at a", gluedCappingSign(grading, params), {}, {}});

  const Sign total = ledger.total();
  out.sigmaParity = (total == Sign::plus()) ? 0 : 1;
  out.matches = (out.sigmaParity == 0);
  return out;
}

CanonicalGluingResult canonicalGluingCheck(const ClosedDiskProblem& a,
                                           const ClosedDiskProblem& b, int n,
                                           std::optional<unsigned long long> shuffleSeed) {
  if (a.kerDim - a.cokerDim != n || b.kerDim - b.cokerDim != n)
    throw std::invalid_argument("canonicalGluingCheck: problems inconsistent with closed disks");

  // Degenerate gluing data: the glued kernel is [Ker(B), Ker(A)] and the
  // glued cokernel [Coker(B), R^n, Coker(A)], identified block by block.
  ExactSequenceData data;
  data.v1 = SummandColumn({{"Ker(A#B).B", b.kerDim, Sign::plus()},
                           {"Ker(A#B).A", a.kerDim, Sign::plus()}});
  data.w1 = SummandColumn({{"Ker(B)", b.kerDim, Sign::plus()}, {"Ker(A)", a.kerDim, Sign::plus()}});
  data.w2 = SummandColumn({{"Coker(B)", b.cokerDim, Sign::plus()},
                           {"R^n", n, Sign::plus()},
                           {"Coker(A)", a.cokerDim, Sign::plus()}});
  data.v2 = SummandColumn({{"Coker(A#B).B", b.cokerDim, Sign::plus()},
                           {"R^n'", n, Sign::plus()},
                           {"Coker(A#B).A", a.cokerDim, Sign::plus()}});
  data.alpha = {{"Ker(A#B).B", "Ker(B)", Sign::plus()}, {"Ker(A#B).A", "Ker(A)", Sign::plus()}};
  data.gamma = {{"Coker(B)", "Coker(A#B).B", Sign::plus()},
                {"R^n", "R^n'", Sign::plus()},
                {"Coker(A)", "Coker(A#B).A", Sign::plus()}};

  // The glued determinant token: or(V1) * or(V2) = or(W1) * or(W2) *
  // coupling; each problem's token sits on its kernel block.
  const Sign coupling = exactSequenceCouplingSign(data);
  Sign glued = coupling * a.orient * b.orient;

  bool consistent = (glued == a.orient * b.orient);

  if (shuffleSeed) {
    // Ledger replay with shuffled middle columns; the reorder costs must
    // cancel against the changed coupling.
    std::mt19937_64 rng(*shuffleSeed);
    auto shuffledLabels = [&](const SummandColumn& col) {
      auto labels = col.labels();
      std::shuffle(labels.begin(), labels.end(), rng);
      return labels;
    };
    const auto w1Order = shuffledLabels(data.w1);
    const auto w2Order = shuffledLabels(data.w2);
    auto [w1Shuffled, costW1] = blockReorderSign(data.w1, w1Order);
    auto [w2Shuffled, costW2] = blockReorderSign(data.w2, w2Order);
    ExactSequenceData shuffled = data;
    shuffled.w1 = SummandColumn(w1Shuffled.summands());
    shuffled.w2 = SummandColumn(w2Shuffled.summands());
    const Sign shuffledCoupling = exactSequenceCouplingSign(shuffled);
    if (shuffledCoupling * costW1 * costW2 != coupling) consistent = false;
  }

  CanonicalGluingResult result;
  result.gluedOrient = glued;
  result.matchesProduct = consistent;
  return result;
}

}  // namespace lch

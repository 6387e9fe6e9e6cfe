#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lch/capping.hpp"
#include "lch/sign.hpp"
#include "lch/summand.hpp"

namespace lch {

/// Which ambient space a disk lives in; fixes the rigidity constraint and
/// the translation-kernel bookkeeping.
enum class DiskSetting { LagrangianProjection, Symplectization, Cobordism };

/// A punctured disk as a formal operator: one positive chord, an ordered
/// word of negative chords, and the kernel/cokernel parities its setting
/// and rigidity force.
struct FormalDiskOp {
  int posGrading = 0;
  std::vector<int> negGradings;
  DiskSetting setting = DiskSetting::Symplectization;
  bool rigid = true;

  int negativeCount() const { return int(negGradings.size()); }
  int gradingSum() const;

  /// |a| - sum|b_i| - 1 in the projection and symplectization,
  /// |a| - sum|b_i| over a cobordism; zero for rigid disks.
  int formalDimension() const;
  bool rigidityHolds() const;

  /// Translation kernel dimension: 1 in the symplectization, else 0.
  int kerDim() const;
  /// Cokernel dimension of the rigid problem: m - 2 for m >= 2 negatives.
  int cokerDim() const;
};

/// One recorded step of a sign derivation. Permutation steps carry the
/// block dimensions and the applied permutation so an independent oracle
/// can replay them; normalization steps carry only their sign.
struct LedgerStep {
  std::string name;
  Sign sign;
  std::vector<int> dimsBefore;
  std::vector<int> permutation;
};

struct SignLedger {
  std::vector<LedgerStep> steps;

  Sign total() const;
  void append(LedgerStep step) { steps.push_back(std::move(step)); }
  void append(const SignLedger& other);
  std::string toString() const;
};

/// Which of the paper-shaped gluing configurations a scenario describes.
enum class ScenarioVariant { DSquared, ChainmapT, ChainmapTtilde, TrivialConcat };

/// Combinatorial data from which the gluing sequences are assembled. The
/// fields used depend on the variant:
///
///  - DSquared: m, k, r, fGradings (m-1 entries), bGradings (r entries with
///    the k-th forced by rigidity), aGrading forced; tokens mu = {mu1, mu2}.
///  - ChainmapT: m, mi (m entries), bGradings (m entries), aGrading forced;
///    tokens mu (m entries) and eps = {eps0}.
///  - ChainmapTtilde: l, k, j, cGradings (l entries), fGradings (k entries
///    with |c_j| forced), aGrading forced; tokens mu = {mu0}, eps = {epsj}.
///  - TrivialConcat: aGrading.
struct GluingScenario {
  ScenarioVariant variant = ScenarioVariant::DSquared;
  CappingSystemParams params{1, 1};
  int m = 0;
  int k = 0;
  int r = 0;
  int l = 0;
  int j = 0;
  std::vector<int> mi;
  std::vector<int> bGradings;
  std::vector<int> cGradings;
  std::vector<int> fGradings;
  int aGrading = 0;
  std::vector<Sign> mu;
  std::vector<Sign> eps;

  std::string describe() const;
};

/// Helpers that fill the rigidity-forced gradings and validate ranges.
GluingScenario makeDSquaredScenario(int m, int k, int r, std::vector<int> bGradingsFree,
                                    std::vector<int> fGradings, CappingSystemParams params);
GluingScenario makeChainmapTScenario(std::vector<int> mi, std::vector<int> bGradings,
                                     CappingSystemParams params);
GluingScenario makeChainmapTtildeScenario(int j, std::vector<int> cGradingsFree,
                                          std::vector<int> fGradings,
                                          CappingSystemParams params);

/// Outcome of mechanically rearranging one pair of gluing sequences.
struct RearrangementResult {
  Sign total;
  Sign closedForm;
  bool matches = false;
  SignLedger ledger;
};

/// The two capped gluing sequences behind the boundary-cancellation step of
/// the differential-squares-to-zero argument, rearranged block by block.
/// Requires variant DSquared with m > 2, r > 1; the total must come out as
/// (-1)^{mk + sum_{i<k}|b_i| + r + 1}.
RearrangementResult dsquaredRearrangementSign(const GluingScenario& scenario);

/// Chain-map sequences for the half glued along all negative punctures;
/// closed form (-1)^{sum i(m_i+1) + sum(|b_i|+n+dA+1)}, plus the downstream
/// boundary orientation (-1)^{1+sum m_i} carried by the token word
/// eps0 * mu_1 ... mu_m.
struct ChainmapResult {
  RearrangementResult rearrangement;
  Sign boundarySign;
  Sign boundaryClosedForm;
  bool boundaryMatches = false;
  std::string boundaryTokens;
  SignLedger boundaryLedger;
};
ChainmapResult chainmapTSign(const GluingScenario& scenario);

/// Chain-map sequences for the half glued at a single negative puncture;
/// closed form (|c_j|+n+dA+1) + j(k+1) + k + l + sum_{i<j}|c_i|, boundary
/// orientation (-1)^{1+l+k+sum_{i<j}|c_i|} on mu0 * eps_j.
ChainmapResult chainmapTtildeSign(const GluingScenario& scenario);

/// One broken configuration contributing to the square of the differential:
/// the inner disk covers width-many word letters starting at position k.
struct BrokenConfig {
  int k = 1;
  int innerNegatives = 2;  // number of negative punctures of the inner disk
};

/// Verdict of pairing two broken configurations over the same chord word.
struct CancellationResult {
  bool holds = false;
  /// The token identity the orientations force: first-product ==
  /// requiredRelation * second-product.
  Sign requiredRelation;
  SignLedger firstLedger;
  SignLedger secondLedger;
};

/// Derives the boundary orientation of each broken configuration through
/// the commutative-diagram bookkeeping and confirms the two contributions
/// cancel: (-1)^{sum_{i<k}|d_i|} mu1 mu2 = -(-1)^{sum_{i<k'}|d_i|} mu1' mu2'.
CancellationResult dsquaredBoundaryCancellation(const std::vector<int>& wordGradings,
                                                BrokenConfig first, BrokenConfig second,
                                                CappingSystemParams params);

/// Confirms the final chain-map identity eps0 mu_1...mu_m =
/// (-1)^{sum_{i<j}|c_i|} mu0 eps_j by deriving both boundary orientations
/// mechanically for a compatible T / T-tilde pair over the same glued word.
CancellationResult chainmapCancellation(const GluingScenario& tScenario,
                                        const GluingScenario& ttildeScenario);

/// The trivial-cobordism sign: assembles the concatenation sequences for
/// the strip over a chord of grading |a| and returns sigma (always 0) with
/// the full ledger.
struct TrivialCobordismResult {
  int sigmaParity = 0;  // exponent of the capping sign of the strip
  bool matches = false;
  SignLedger ledger;
};
TrivialCobordismResult trivialCobordismSign(int grading, CappingSystemParams params);

/// A dbar-problem on the closed disk, as orientation data: kernel/cokernel
/// dimensions with ker - coker = n, and an orientation token relative to
/// the canonical orientation.
struct ClosedDiskProblem {
  int kerDim = 0;
  int cokerDim = 0;
  Sign orient;
};

/// Checks that gluing two closed-disk problems through the closed-gluing
/// sequence (with the R^n summand between the cokernels) transports the
/// canonical tokens to the canonical token of the glued problem, i.e. the
/// glued token is the product of the input tokens, independently of the
/// bookkeeping order (exercised via shuffleSeed).
struct CanonicalGluingResult {
  Sign gluedOrient;
  bool matchesProduct = false;
};
CanonicalGluingResult canonicalGluingCheck(const ClosedDiskProblem& a,
                                           const ClosedDiskProblem& b, int n,
                                           std::optional<unsigned long long> shuffleSeed = {});

}  // namespace lch

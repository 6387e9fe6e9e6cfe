#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "lch/exact_sequence.hpp"
#include "lch/exact_sequence_oracle.hpp"
#include "lch/reorder_oracle.hpp"
#include "lch/summand.hpp"

using namespace lch;

namespace {

SummandColumn makeColumn(std::initializer_list<std::pair<const char*, int>> blocks) {
  std::vector<FormalSummand> summands;
  for (const auto& [label, dim] : blocks) summands.push_back({label, dim, Sign::plus()});
  return SummandColumn(std::move(summands));
}

std::vector<std::string> reversed(const SummandColumn& col) {
  auto labels = col.labels();
  std::reverse(labels.begin(), labels.end());
  return labels;
}

}  // namespace

TEST(BlockReorder, AdjacentOddOddTransposition) {
  auto col = makeColumn({{"A", 1}, {"B", 1}});
  auto [reorderedCol, sign] = blockReorderSign(col, reversed(col));
  EXPECT_EQ(sign, Sign::minus());
  EXPECT_EQ(reorderedCol.sign(), Sign::minus());
  EXPECT_EQ(reorderedCol.labels(), (std::vector<std::string>{"B", "A"}));
}

TEST(BlockReorder, EvenBlockMovesFreely) {
  auto col = makeColumn({{"A", 2}, {"B", 3}});
  auto [_, sign] = blockReorderSign(col, reversed(col));
  EXPECT_EQ(sign, Sign::plus());
}

TEST(BlockReorder, FullReversalFiveBlocks) {
  // Expected value frozen from the permutation-matrix determinant oracle:
  // three odd blocks pairwise transposed gives (-1)^3.
  auto col = makeColumn({{"A", 1}, {"B", 0}, {"C", 1}, {"D", 1}, {"E", 0}});
  auto [_, sign] = blockReorderSign(col, reversed(col));
  EXPECT_EQ(sign, Sign::minus());
  const std::vector<int> dims{1, 0, 1, 1, 0};
  const std::vector<int> perm{4, 3, 2, 1, 0};
  EXPECT_EQ(blockReorderOracle(dims, perm), Sign::minus());
}

TEST(BlockReorder, RejectsBadLabels) {
  auto col = makeColumn({{"A", 1}, {"B", 1}});
  EXPECT_THROW(blockReorderSign(col, std::vector<std::string>{"A", "X"}),
               std::invalid_argument);
  EXPECT_THROW(blockReorderSign(col, std::vector<std::string>{"A", "A"}),
               std::invalid_argument);
  EXPECT_THROW(blockReorderSign(col, std::vector<std::string>{"A"}), std::invalid_argument);
  EXPECT_THROW(makeColumn({{"A", 1}, {"A", 2}}), std::invalid_argument);
}

TEST(BlockReorderOracle, KnownValues) {
  EXPECT_EQ(blockReorderOracle(std::vector<int>{1, 1}, std::vector<int>{1, 0}), Sign::minus());
  EXPECT_EQ(blockReorderOracle(std::vector<int>{2, 3}, std::vector<int>{1, 0}), Sign::plus());
  // Frozen: a 3-cycle of odd blocks is an even permutation of vectors.
  EXPECT_EQ(blockReorderOracle(std::vector<int>{1, 1, 1}, std::vector<int>{2, 0, 1}),
            Sign::plus());
}

TEST(BlockReorder, AgreesWithOracleExhaustively) {
  // All columns with up to 4 blocks, dims in {0,1,2}, all permutations.
  for (int blocks = 1; blocks <= 4; ++blocks) {
    std::vector<int> dims(blocks, 0);
    while (true) {
      std::vector<int> perm(blocks);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        EXPECT_EQ(koszulPermutationSign(dims, perm), blockReorderOracle(dims, perm));
      } while (std::next_permutation(perm.begin(), perm.end()));
      // Next dims vector in base 3.
      int i = 0;
      while (i < blocks && dims[i] == 2) dims[i++] = 0;
      if (i == blocks) break;
      ++dims[i];
    }
  }
}

TEST(BlockReorder, Multiplicativity) {
  std::mt19937_64 rng(20240811);
  std::uniform_int_distribution<int> dimDist(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const int blocks = 2 + int(rng() % 5);
    std::vector<FormalSummand> summands;
    for (int b = 0; b < blocks; ++b)
      summands.push_back({"b" + std::to_string(b), dimDist(rng), Sign::plus()});
    SummandColumn col(summands);

    auto labels1 = col.labels();
    std::shuffle(labels1.begin(), labels1.end(), rng);
    auto [col1, s1] = blockReorderSign(col, labels1);
    auto labels2 = labels1;
    std::shuffle(labels2.begin(), labels2.end(), rng);
    auto [col2, s2] = blockReorderSign(col1, labels2);

    auto [direct, sDirect] = blockReorderSign(col, labels2);
    EXPECT_EQ(sDirect, s1 * s2);
    EXPECT_EQ(direct, col2);
    // Undoing the reorder restores the accumulated sign.
    auto [back, sBack] = blockReorderSign(col2, col.labels());
    EXPECT_EQ(back.sign(), col.sign());
    EXPECT_EQ(sBack, sDirect);
  }
}

TEST(BlockReorder, KoszulSignsDependOnlyOnParity) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int blocks = 1 + int(rng() % 6);
    std::vector<int> dims(blocks), parities(blocks);
    for (int b = 0; b < blocks; ++b) {
      dims[b] = int(rng() % 5);
      parities[b] = dims[b] % 2;
    }
    std::vector<int> perm(blocks);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(koszulPermutationSign(dims, perm), koszulPermutationSign(parities, perm));
  }
}

namespace {

// Block data realizing the dims (1,2,2,1) example: alpha hits P with a
// mixing component in the complement, beta carries Q to R with a negative
// ratio, gamma scales S.
struct SmallSequence {
  ExactSequenceData data;
  MatQ alpha{2, 1, {2, 5}};
  MatQ beta{2, 2, {5, -2, 0, 0}};
  MatQ gamma{1, 2, {0, 3}};

  SmallSequence() {
    data.v1 = SummandColumn({{"V", 1, Sign::plus()}});
    data.w1 = SummandColumn({{"P", 1, Sign::plus()}, {"Q", 1, Sign::plus()}});
    data.w2 = SummandColumn({{"R", 1, Sign::plus()}, {"S", 1, Sign::plus()}});
    data.v2 = SummandColumn({{"U", 1, Sign::plus()}});
    data.alpha = {{"V", "P", Sign::plus()}};
    data.beta = {{"Q", "R", Sign::minus()}};
    data.gamma = {{"S", "U", Sign::plus()}};
  }
};

}  // namespace

TEST(ExactSequence, IsomorphismCases) {
  // v1 = v2 = 0, beta the identity block map: w2 inherits w1's orientation.
  ExactSequenceData iso;
  iso.w1 = SummandColumn({{"A", 1, Sign::plus()}, {"B", 2, Sign::plus()}});
  iso.w2 = SummandColumn({{"A'", 1, Sign::plus()}, {"B'", 2, Sign::plus()}});
  iso.beta = {{"A", "A'", Sign::plus()}, {"B", "B'", Sign::plus()}};
  ExactSequenceOrientations oriented;
  oriented.w1 = Sign::minus();
  EXPECT_EQ(exactSequenceTransport(iso, oriented), Sign::minus());
  oriented.w1 = Sign::plus();
  EXPECT_EQ(exactSequenceTransport(iso, oriented), Sign::plus());

  // v1 = w1 = 0, gamma the identity block map: w2 matches v2.
  ExactSequenceData rightEnd;
  rightEnd.w2 = SummandColumn({{"X", 3, Sign::plus()}});
  rightEnd.v2 = SummandColumn({{"Y", 3, Sign::plus()}});
  rightEnd.gamma = {{"X", "Y", Sign::plus()}};
  ExactSequenceOrientations o2;
  o2.v2 = Sign::minus();
  o2.w1 = Sign::plus();
  EXPECT_EQ(exactSequenceTransport(rightEnd, o2), Sign::minus());
}

TEST(ExactSequence, TransportAgreesWithOracleOnSmallExample) {
  // Frozen from the oracle: both paths give +1 on this data.
  SmallSequence seq;
  ExactSequenceOrientations oriented;
  oriented.w1 = Sign::plus();
  EXPECT_EQ(exactSequenceTransport(seq.data, oriented), Sign::plus());
  EXPECT_EQ(exactSequenceOracle(seq.alpha, seq.beta, seq.gamma), Sign::plus());
}

TEST(ExactSequence, TransportIsComplementOrderIndependent) {
  // Reordering the stored complement blocks must not change the transport.
  ExactSequenceData data;
  data.v1 = SummandColumn({{"V", 1, Sign::plus()}});
  data.w1 = SummandColumn(
      {{"P", 1, Sign::plus()}, {"Q", 2, Sign::plus()}, {"R", 1, Sign::plus()}});
  data.w2 = SummandColumn(
      {{"Q'", 2, Sign::plus()}, {"R'", 1, Sign::plus()}, {"S", 1, Sign::plus()}});
  data.v2 = SummandColumn({{"U", 1, Sign::plus()}});
  data.alpha = {{"V", "P", Sign::plus()}};
  data.beta = {{"Q", "Q'", Sign::plus()}, {"R", "R'", Sign::minus()}};
  data.gamma = {{"S", "U", Sign::plus()}};
  ExactSequenceOrientations oriented;
  oriented.w1 = Sign::plus();
  const Sign reference = exactSequenceTransport(data, oriented);

  auto permutedW1 = blockReorderSign(data.w1, std::vector<std::string>{"R", "P", "Q"});
  auto permutedW2 = blockReorderSign(data.w2, std::vector<std::string>{"S", "R'", "Q'"});
  ExactSequenceData shuffled = data;
  // Keep the reference orientations: fresh columns in the permuted order.
  shuffled.w1 = SummandColumn(permutedW1.first.summands());
  shuffled.w2 = SummandColumn(permutedW2.first.summands());
  // The stored order changed, so the transported orientation changes by
  // exactly the two reorder costs.
  const Sign expected =
      reference * permutedW1.second * permutedW2.second;
  EXPECT_EQ(exactSequenceTransport(shuffled, oriented), expected);
}

TEST(ExactSequenceOracle, KnownValues) {
  // Identity beta on dim 2, both v's zero.
  EXPECT_EQ(exactSequenceOracle(MatQ(2, 0), MatQ::identity(2), MatQ(0, 2)), Sign::plus());
  // Orientation-reversing isomorphism.
  EXPECT_EQ(exactSequenceOracle(MatQ(2, 0), MatQ(2, 2, {1, 0, 0, -1}), MatQ(0, 2)),
            Sign::minus());
}

TEST(ExactSequenceOracle, ChoiceIndependenceOnSmallExample) {
  SmallSequence seq;
  OracleBasisChoices choices;
  choices.complement = MatQ(2, 1, {0, 1});  // e_Q instead of the greedy e_P
  EXPECT_EQ(exactSequenceOracle(seq.alpha, seq.beta, seq.gamma, choices), Sign::plus());
  choices.complement = MatQ(2, 1, {1, 1});
  choices.gammaPreimage = MatQ(2, 1, {Rational(7), Rational(1, 3)});
  EXPECT_EQ(exactSequenceOracle(seq.alpha, seq.beta, seq.gamma, choices), Sign::plus());
}

TEST(ExactSequenceOracle, NamesFailingRankCondition) {
  // beta not killing the alpha image.
  MatQ alpha(2, 1, {1, 0});
  MatQ beta = MatQ::identity(2);
  MatQ gamma(1, 2, {0, 1});
  try {
    exactSequenceOracle(alpha, beta, gamma);
    FAIL() << "expected failure";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("beta o alpha"), std::string::npos);
  }
}

TEST(ExactSequence, RejectsInconsistentData) {
  ExactSequenceData data;
  data.v1 = SummandColumn({{"V", 1, Sign::plus()}});
  data.w1 = SummandColumn({{"P", 2, Sign::plus()}});
  data.alpha = {{"V", "P", Sign::plus()}};
  ExactSequenceOrientations oriented;
  oriented.w1 = Sign::plus();
  EXPECT_THROW(exactSequenceTransport(data, oriented), std::invalid_argument);

  ExactSequenceOrientations both;
  both.w1 = Sign::plus();
  both.w2 = Sign::plus();
  EXPECT_THROW(exactSequenceTransport(ExactSequenceData{}, both), std::invalid_argument);
}

#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lch/sign.hpp"

namespace lch {

/// A labeled formal oriented vector space of known dimension. Orientation is
/// a sign relative to the summand's fixed reference basis; summands of
/// dimension zero always carry +1.
struct FormalSummand {
  std::string label;
  int dim = 0;
  Sign orient;

  friend bool operator==(const FormalSummand&, const FormalSummand&) = default;
};

/// Koszul sign of a block permutation: (-1)^{sum over inverted pairs of
/// dim_i * dim_j}. `perm[i]` is the index (into the current order) of the
/// block that lands at position i, so moving a block past an
/// even-dimensional block costs +1.
Sign koszulPermutationSign(std::span<const int> dims, std::span<const int> perm);

/// An ordered list of formal summands with an accumulated sign: exactly the
/// bracketed columns of the gluing sequences. The sign records the product
/// of all reordering costs applied since construction.
class SummandColumn {
 public:
  SummandColumn() = default;

  /// Labels must be pairwise distinct; dims nonnegative; zero-dimensional
  /// summands must be positively oriented.
  explicit SummandColumn(std::vector<FormalSummand> summands, Sign sign = Sign::plus());

  const std::vector<FormalSummand>& summands() const { return summands_; }
  Sign sign() const { return sign_; }
  std::size_t size() const { return summands_.size(); }
  bool empty() const { return summands_.empty(); }

  int totalDim() const;
  std::vector<int> dims() const;
  std::vector<std::string> labels() const;

  bool hasLabel(const std::string& label) const;
  int indexOf(const std::string& label) const;  // throws on unknown label
  const FormalSummand& operator[](std::size_t i) const { return summands_[i]; }

  /// Product of the summand orientation signs.
  Sign orientationProduct() const;

  friend bool operator==(const SummandColumn&, const SummandColumn&) = default;

 private:
  friend std::pair<SummandColumn, Sign> blockReorderSign(const SummandColumn&,
                                                         std::span<const std::string>);
  std::vector<FormalSummand> summands_;
  Sign sign_;
};

/// Reorders the column's summands into `targetOrder` (a permutation of its
/// labels) and returns the new column together with the Koszul cost of the
/// move. The new column's accumulated sign is the old one times the cost.
/// Unknown or duplicated labels are rejected.
std::pair<SummandColumn, Sign> blockReorderSign(const SummandColumn& column,
                                                std::span<const std::string> targetOrder);

}  // namespace lch

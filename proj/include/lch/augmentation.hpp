#pragma once

#include <map>
#include <vector>

#include "lch/dga.hpp"
#include "lch/matrix.hpp"

namespace lch {

/// An algebra map to the ground ring, supported on grading-zero chords.
struct Augmentation {
  std::map<ChordName, Int> values;

  Int valueOf(const ChordName& name) const {
    auto it = values.find(name);
    return it == values.end() ? Int(0) : it->second;
  }
};

struct AugmentationReport {
  bool ok = true;
  /// Chords whose differential does not augment to zero, with the value.
  std::vector<std::pair<ChordName, Int>> nonzero;
};

/// Extends the augmentation multiplicatively (unit to 1) and checks that it
/// annihilates every generator differential. Throws when the augmentation
/// is supported outside grading zero or on unknown chords.
AugmentationReport augmentationCheck(const Dga& dga, const Augmentation& aug);

/// The word-length-one part of the differential conjugated by
/// a -> a + aug(a), organized by grading.
class LinearizedComplex {
 public:
  /// Chords of each grading, in name order.
  const std::map<int, std::vector<ChordName>>& basis() const { return basis_; }

  /// Matrix of the linearized differential from grading g to g - 1; rows
  /// index grading g-1 chords, columns grading g chords. Absent gradings
  /// have empty matrices.
  MatQ matrixFor(int grading) const;
  const std::map<int, MatQ>& matrices() const { return matrices_; }

  /// Rank of the linearized homology over Q at each grading that carries
  /// chords.
  std::map<int, int> homologyRanks() const;

  /// The composite of consecutive matrices; zero iff the linearized
  /// differential squares to zero.
  bool squaresToZero() const;

 private:
  friend LinearizedComplex linearizedDifferential(const Dga& dga, const Augmentation& aug);
  std::map<int, std::vector<ChordName>> basis_;
  std::map<int, MatQ> matrices_;
};

/// Requires augmentationCheck to pass.
LinearizedComplex linearizedDifferential(const Dga& dga, const Augmentation& aug);

}  // namespace lch

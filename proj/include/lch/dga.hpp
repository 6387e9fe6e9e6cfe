#pragma once

#include <map>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "lch/element.hpp"

namespace lch {

/// A free unital noncommutative differential graded algebra over Z,
/// presented by its generators and the differential on them. Immutable
/// after construction; chords absent from the differential map have
/// vanishing differential.
class Dga {
 public:
  Dga() = default;
  Dga(std::vector<Chord> chords, std::map<ChordName, Element> diff);

  const std::vector<Chord>& chords() const { return chords_; }
  const std::map<ChordName, Element>& diff() const { return diff_; }

  bool hasChord(const ChordName& name) const;
  const Chord& chord(const ChordName& name) const;
  int grading(const ChordName& name) const;

  /// The differential of a generator (zero when unset).
  const Element& diffOf(const ChordName& name) const;

  /// Sum of factor gradings; the unit has grading zero.
  int wordGrading(const Word& word) const;

  /// True when every word of the element has the same grading, which is
  /// then returned.
  std::optional<int> homogeneousGrading(const Element& element) const;

  /// Every chord name occurring in the element exists here.
  bool containsAllChordsOf(const Element& element) const;

  /// Coefficients of every differential reduced mod 2.
  Dga mod2() const;

  friend bool operator==(const Dga&, const Dga&) = default;

 private:
  std::vector<Chord> chords_;               // sorted by name
  std::map<ChordName, Element> diff_;
};

/// The differential extended to the whole algebra by Z-linearity and the
/// signed Leibniz rule d(ab) = d(a) b + (-1)^{|a|} a d(b).
Element leibnizExtend(const Dga& dga, const Element& element);

/// Pairs (chord, d(d(chord))) with nonzero square; empty exactly when the
/// differential squares to zero on generators, hence everywhere.
std::vector<std::pair<ChordName, Element>> dSquaredReport(const Dga& dga);

/// A word of the differential of `chord` whose grading is not |chord| - 1,
/// or an image word of a morphism whose grading is not |chord|.
struct GradingViolation {
  ChordName chord;
  Word word;
  int expected = 0;
  int found = 0;
  friend bool operator==(const GradingViolation&, const GradingViolation&) = default;
};

std::vector<GradingViolation> gradingValidate(const Dga& dga);

/// Elementary generator substitution a -> sign * a + addend, with the
/// addend free of a; conjugation by it preserves d^2 = 0.
struct SubstitutionMove {
  ChordName chord;
  Sign sign;
  Element addend;
};

/// Adds a canceling pair d(x) = y with |x| = gradingX.
struct StabilizationMove {
  ChordName x;
  ChordName y;
  int gradingX = 0;
};

using TameMove = std::variant<SubstitutionMove, StabilizationMove>;

/// Applies the moves left to right, returning a DGA with d^2 = 0 whenever
/// the seed satisfies it. Used to synthesize nontrivial fixtures.
Dga applyTameMoves(const Dga& seed, std::span<const TameMove> moves);

}  // namespace lch

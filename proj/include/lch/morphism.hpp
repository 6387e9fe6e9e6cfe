#pragma once

#include <map>
#include <vector>

#include "lch/dga.hpp"

namespace lch {

/// A unital algebra map between DGAs, determined by generator images.
/// Chords without an explicit image map to themselves when the target has
/// them; construction requires a total image map otherwise.
class DgaMorphism {
 public:
  DgaMorphism() = default;
  DgaMorphism(Dga source, Dga target, std::map<ChordName, Element> images);

  const Dga& source() const { return source_; }
  const Dga& target() const { return target_; }
  const std::map<ChordName, Element>& images() const { return images_; }
  const Element& imageOf(const ChordName& name) const;

  friend bool operator==(const DgaMorphism&, const DgaMorphism&) = default;

 private:
  Dga source_;
  Dga target_;
  std::map<ChordName, Element> images_;
};

/// The Z-linear, multiplicative, unit-preserving extension of the
/// generator images.
Element morphismApply(const DgaMorphism& phi, const Element& element);

struct ChainMapReport {
  bool ok = true;
  std::vector<ChordName> offending;
};

/// True iff phi(d_+ a) = d_-(phi(a)) for every source chord.
ChainMapReport checkChainMap(const DgaMorphism& phi);

/// Image words must have the source chord's grading.
std::vector<GradingViolation> gradingValidate(const DgaMorphism& phi);

/// later o first; the middle DGAs must agree.
DgaMorphism compose(const DgaMorphism& later, const DgaMorphism& first);

DgaMorphism identityMorphism(const Dga& dga);

/// The change-of-capping isomorphism: phi(a) = signs(a) a onto a new DGA
/// with the conjugated differential. Involutive, and a chain map by
/// construction.
std::pair<DgaMorphism, Dga> cappingChangeMorphism(const Dga& dga,
                                                  const std::map<ChordName, Sign>& signs);

}  // namespace lch

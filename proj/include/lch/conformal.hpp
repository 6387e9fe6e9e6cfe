#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lch/rational.hpp"
#include "lch/sign.hpp"

namespace lch {

/// A rational linear combination of puncture-tangent symbols on one disk.
struct PunctureVector {
  std::map<int, Rational> coords;  // puncture index -> coefficient

  static PunctureVector unit(int puncture, Sign sign = Sign::plus());
};

/// Model of the tangent space to the space of conformal structures on a
/// disk with m+1 boundary punctures.
///
/// Punctures sit at strictly increasing rational parameters in the
/// tan-half-angle coordinate on the boundary circle, so counterclockwise
/// order is parameter order and the disk-automorphism directions are
/// spanned by 1, t, t^2. The tangent space is the quotient of the span of
/// the puncture moves by those three directions, and orientation questions
/// become exact determinant signs.
class ConformalModel {
 public:
  /// Parameters must be strictly increasing; punctures are indexed 0..m in
  /// counterclockwise order, with puncture 0 the positive one.
  explicit ConformalModel(std::vector<Rational> params);

  /// Equally spaced punctures, the generic configuration.
  static ConformalModel regular(int m);

  int punctureCount() const { return int(params_.size()); }
  int m() const { return punctureCount() - 1; }

  /// The fixed positive orientation: counterclockwise puncture moves
  /// (partial_{p_m}, ..., partial_{p_3}).
  std::vector<PunctureVector> defaultBasis() const;

  /// Orientation of `vectors` relative to the default basis, or nullopt when
  /// the vectors do not descend to a basis of the quotient.
  std::optional<Sign> orientationVsDefault(const std::vector<PunctureVector>& vectors) const;

  /// Orientation of one list relative to another.
  std::optional<Sign> compare(const std::vector<PunctureVector>& a,
                              const std::vector<PunctureVector>& b) const;

 private:
  std::vector<Rational> params_;
};

/// The alternative positively oriented basis obtained by fixing punctures
/// 0, j and k instead of 0, 1, 2: descending puncture moves with a minus
/// sign exactly on the punctures strictly between j and k.
std::vector<PunctureVector> alternativeFixedBasis(int m, int j, int k);

/// An ordered signed puncture basis for the conformal tangent space, with
/// the sign separating it from the default basis recorded at construction.
class ConformalSlot {
 public:
  static ConformalSlot defaults(int m);
  static ConformalSlot withBasis(int m, std::vector<PunctureVector> basis);

  int m() const { return m_; }
  const std::vector<PunctureVector>& basis() const { return basis_; }
  Sign recordedSign() const { return recordedSign_; }

 private:
  ConformalSlot(int m, std::vector<PunctureVector> basis, Sign sign)
      : m_(m), basis_(std::move(basis)), recordedSign_(sign) {}
  int m_;
  std::vector<PunctureVector> basis_;
  Sign recordedSign_;
};

/// Result of gluing the positive puncture of a disk with m1 negative
/// punctures to the k-th negative puncture of a disk with m2 negative
/// punctures, at the level of conformal orientations.
struct ConformalGlueResult {
  Sign closedForm;              // (-1)^{(m1-1)k+1}
  Sign ledger;                  // explicit-basis bookkeeping in the model
  bool agree;                   // ledger == closedForm
  Sign sign() const { return closedForm; }  // the closed form wins on disagreement
};

/// Computes the orientation mismatch between [basis of C_{m2}, basis of
/// C_{m1}, outward normal] and the glued disk's fixed orientation. The
/// ledger path realizes the glued puncture list (p_0..p_{k-1}, q_1..q_{m1},
/// p_{k+1}..p_{m2}) with the q-cluster in a short arc, lifts both default
/// bases, takes the outward normal last, and compares determinants; the
/// closed form is (-1)^{(m1-1)k+1}. Disagreements are reported, not patched.
ConformalGlueResult conformalGlueSign(int m1, int m2, int k);

/// The interchangeable realizations of the outward normal at the broken
/// configuration; all transverse choices must give the same ledger sign.
enum class NormalRealization {
  FirstClusterPuncture,      // d_{q_1}
  MinusPrecedingPuncture,    // -d_{p_{k-1}}
  FollowingPuncture,         // d_{p_{k+1}}, needs k < m2
  MinusLastClusterPuncture,  // -d_{q_{m1}}, transverse only for m1 = 2
};

/// Ledger sign with an explicit normal realization; nullopt when that
/// realization is tangent to the stratum (a repeated basis direction).
std::optional<Sign> conformalGlueLedger(int m1, int m2, int k, NormalRealization normal);

}  // namespace lch

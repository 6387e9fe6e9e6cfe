#pragma once

#include <stdexcept>

#include "lch/sign.hpp"

namespace lch {

/// Whether a chord occurs as the positive or a negative puncture of a disk.
enum class Polarity { Positive, Negative };

/// Ambient dimension n together with the number of auxiliary directions
/// added to the boundary-condition trivializations: one when n = 1, two for
/// n > 1, overridable.
struct CappingSystemParams {
  int n = 1;
  int dA = 1;

  CappingSystemParams(int n_, int dA_) : n(n_), dA(dA_) {
    if (n < 1) throw std::invalid_argument("CappingSystemParams: n must be positive");
    if (dA != 1 && dA != 2)
      throw std::invalid_argument("CappingSystemParams: dA must be 1 or 2");
  }

  /// The default rule: dA = 1 iff n = 1.
  static CappingSystemParams forDim(int n) { return CappingSystemParams(n, n == 1 ? 1 : 2); }

  friend bool operator==(const CappingSystemParams&, const CappingSystemParams&) = default;
};

/// Kernel and cokernel dimension parities of a capping operator.
struct CappingParities {
  int ker = 0;
  int coker = 0;
  friend bool operator==(const CappingParities&, const CappingParities&) = default;
};

/// The admissibility parities: positive cappings have even kernel and
/// cokernel of parity |p| + n + dA + 1; negative cappings have odd kernel
/// and cokernel of parity |p|.
CappingParities cappingParities(int grading, Polarity polarity, CappingSystemParams params);

/// Sign by which the glued capping disk at a chord of grading |p| differs
/// from the canonical orientation: (-1)^{|p| + n + dA + 1}.
Sign gluedCappingSign(int grading, CappingSystemParams params);

/// A capping operator as a formal object: its parities plus the chosen
/// orientation token.
struct FormalCappingOp {
  int chordGrading = 0;
  Polarity polarity = Polarity::Positive;
  int kerParity = 0;
  int cokerParity = 0;
  Sign orient;

  FormalCappingOp(int grading, Polarity pol, CappingSystemParams params,
                  Sign orientation = Sign::plus())
      : chordGrading(grading), polarity(pol), orient(orientation) {
    const CappingParities parities = cappingParities(grading, pol, params);
    kerParity = parities.ker;
    cokerParity = parities.coker;
  }
};

}  // namespace lch

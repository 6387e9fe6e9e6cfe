#pragma once

#include <optional>

#include "lch/matrix.hpp"
#include "lch/sign.hpp"

namespace lch {

/// Optional basis choices for the oracle; when absent they are constructed
/// greedily. Supplying different valid choices must not change the result,
/// which is what the self-consistency sweep checks.
struct OracleBasisChoices {
  /// Columns extending the alpha image to a basis of W1.
  std::optional<MatQ> complement;
  /// Columns u of W2 with gamma(u) the standard basis of V2.
  std::optional<MatQ> gammaPreimage;
};

/// Brute-force check of the exact-sequence orientation convention: builds
/// the convention's bases literally from explicit rational matrices
///
///   0 -> Q^{k} --alpha--> Q^{k+m} --beta--> Q^{m+l} --gamma--> Q^{l} -> 0
///
/// and returns the determinant sign of the constructed bases of W1 and W2
/// relative to the standard bases. Agrees with exactSequenceTransport on
/// block-structured data.
///
/// Throws std::invalid_argument naming the failing rank condition when the
/// matrices do not form an exact sequence.
Sign exactSequenceOracle(const MatQ& alpha, const MatQ& beta, const MatQ& gamma,
                         const OracleBasisChoices& choices = {});

}  // namespace lch

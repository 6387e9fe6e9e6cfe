#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lch/sign.hpp"
#include "lch/summand.hpp"

namespace lch {

/// A block-level identification between one summand of a source column and
/// one summand of a target column. `sign` is the determinant sign of the
/// identification relative to the two reference bases; it must be +1 on
/// zero-dimensional blocks.
struct BlockMap {
  std::string from;
  std::string to;
  Sign sign;
};

/// Formal model of a four-term exact sequence
///
///   0 -> V1 --alpha--> W1 --beta--> W2 --gamma--> V2 -> 0
///
/// in which alpha injects each V1 block onto a W1 block, beta matches the
/// complementary W1 blocks with W2 blocks, and gamma surjects the remaining
/// W2 blocks onto the V2 blocks. This is the shape every gluing sequence in
/// the library takes.
struct ExactSequenceData {
  SummandColumn v1, w1, w2, v2;
  std::vector<BlockMap> alpha;
  std::vector<BlockMap> beta;
  std::vector<BlockMap> gamma;
};

/// Which three of the four spaces carry given orientations.
struct ExactSequenceOrientations {
  Sign v1 = Sign::plus();
  Sign v2 = Sign::plus();
  /// Exactly one of the middle spaces is given; the other is computed.
  std::optional<Sign> w1;
  std::optional<Sign> w2;
};

/// Transports orientations through the sequence by the fixed basis recipe:
/// alpha-images of the V1 basis first in W1 followed by a complement w, and
/// (u, beta(w)) in W2 with gamma(u) the chosen V2 basis. Returns the induced
/// orientation of whichever middle space was left open. The result does not
/// depend on the order in which the complement is taken.
///
/// Throws std::invalid_argument on structurally inconsistent identification
/// data (uncovered or doubly covered blocks, dimension mismatches) and when
/// not exactly one of w1/w2 is supplied.
Sign exactSequenceTransport(const ExactSequenceData& data,
                            const ExactSequenceOrientations& oriented);

/// Orientation of V1 induced by given orientations of W1, W2 and V2; the
/// degenerate-end variant needed when a sequence pins both middle columns.
Sign exactSequenceTransportToV1(const ExactSequenceData& data, Sign w1, Sign w2, Sign v2);

/// The product rule behind both transports: or(V1) * or(V2) * [map signs] *
/// [two reorder costs] = or(W1) * or(W2). Exposed for the scenario ledgers.
Sign exactSequenceCouplingSign(const ExactSequenceData& data);

}  // namespace lch

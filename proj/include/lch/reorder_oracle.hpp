#pragma once

#include <span>

#include "lch/sign.hpp"

namespace lch {

/// Independent check of the Koszul sign: materializes each block as
/// consecutive standard basis vectors in a coordinate space of total
/// dimension sum(dims), builds the permutation matrix realizing the block
/// move, and returns the sign of its determinant (computed by exact
/// elimination, not by inversion counting).
///
/// `perm` uses the same convention as koszulPermutationSign: perm[i] is the
/// index of the block that lands at position i.
Sign blockReorderOracle(std::span<const int> dims, std::span<const int> perm);

}  // namespace lch

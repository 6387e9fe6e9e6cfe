#include "lch/reorder_oracle.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

#include "lch/matrix.hpp"

namespace lch {

Sign blockReorderOracle(std::span<const int> dims, std::span<const int> perm) {
  if (dims.size() != perm.size())
    throw std::invalid_argument("blockReorderOracle: size mismatch");
  std::vector<bool> seen(perm.size(), false);
  for (int p : perm) {
    if (p < 0 || p >= int(perm.size()) || seen[p])
      throw std::invalid_argument("blockReorderOracle: not a permutation");
    seen[p] = true;
  }
  for (int d : dims)
    if (d < 0) throw std::invalid_argument("blockReorderOracle: negative dimension");

  const int total = std::accumulate(dims.begin(), dims.end(), 0);
  std::vector<int> blockStart(dims.size(), 0);
  for (std::size_t b = 1; b < dims.size(); ++b)
    blockStart[b] = blockStart[b - 1] + dims[b - 1];

  // Column j of the matrix is the image of the j-th old basis vector: the
  // old basis vector of block b lands in the slot the block occupies after
  // the move, same offset within the block.
  MatQ matrix(total, total);
  int newOffset = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    const int block = perm[i];
    for (int t = 0; t < dims[block]; ++t)
      matrix.at(newOffset + t, blockStart[block] + t) = 1;
    newOffset += dims[block];
  }
  const auto sign = matrix.detSign();
  if (!sign) throw std::logic_error("blockReorderOracle: permutation matrix was singular");
  return *sign;
}

}  // namespace lch

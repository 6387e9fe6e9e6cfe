#include "lch/exact_sequence_oracle.hpp"

#include <stdexcept>

namespace lch {

Sign exactSequenceOracle(const MatQ& alpha, const MatQ& beta, const MatQ& gamma,
                         const OracleBasisChoices& choices) {
  const int dimV1 = alpha.cols();
  const int dimW1 = alpha.rows();
  const int dimW2 = beta.rows();
  const int dimV2 = gamma.rows();
  if (beta.cols() != dimW1 || gamma.cols() != dimW2)
    throw std::invalid_argument("exactSequenceOracle: incompatible matrix shapes");
  if (dimW1 - dimV1 != dimW2 - dimV2)
    throw std::invalid_argument("exactSequenceOracle: not exact (dim W1 - dim V1 != dim W2 - dim V2)");

  if (alpha.rank() != dimV1)
    throw std::invalid_argument("exactSequenceOracle: not exact (alpha is not injective)");
  if (!(beta * alpha).isZero())
    throw std::invalid_argument("exactSequenceOracle: not exact (beta o alpha != 0)");
  if (beta.rank() != dimW1 - dimV1)
    throw std::invalid_argument("exactSequenceOracle: not exact (ker beta != im alpha)");
  if (!(gamma * beta).isZero())
    throw std::invalid_argument("exactSequenceOracle: not exact (gamma o beta != 0)");
  if (gamma.rank() != dimV2)
    throw std::invalid_argument("exactSequenceOracle: not exact (gamma is not surjective)");
  if (beta.rank() != dimW2 - dimV2)
    throw std::invalid_argument("exactSequenceOracle: not exact (im beta != ker gamma)");

  // Vectors u in W2 with gamma(u) the standard basis of V2.
  MatQ u;
  if (choices.gammaPreimage) {
    u = *choices.gammaPreimage;
    if (u.rows() != dimW2 || u.cols() != dimV2)
      throw std::invalid_argument("exactSequenceOracle: gamma preimage has wrong shape");
    if (!(gamma * u == MatQ::identity(dimV2)))
      throw std::invalid_argument("exactSequenceOracle: supplied u is not a gamma preimage");
  } else {
    auto solved = gamma.solve(MatQ::identity(dimV2));
    if (!solved) throw std::logic_error("exactSequenceOracle: surjective gamma not solvable");
    u = *solved;
  }

  // Complement w extending the alpha image to a basis of W1.
  MatQ w;
  if (choices.complement) {
    w = *choices.complement;
    if (w.rows() != dimW1 || w.cols() != dimW1 - dimV1)
      throw std::invalid_argument("exactSequenceOracle: complement has wrong shape");
  } else {
    w = MatQ::extendToBasis(alpha).columnRange(dimV1, dimW1 - dimV1);
  }

  const MatQ basisW1 = alpha.augmentedWith(w);
  const auto d1 = basisW1.detSign();
  if (!d1) throw std::invalid_argument("exactSequenceOracle: complement does not give a basis");

  const MatQ basisW2 = u.augmentedWith(beta * w);
  const auto d2 = basisW2.detSign();
  if (!d2) throw std::logic_error("exactSequenceOracle: constructed W2 basis degenerate");

  return *d1 * *d2;
}

}  // namespace lch

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace lch {

/// Exact arbitrary-precision integer. Morphism composition can grow
/// coefficients past machine range, so all algebra coefficients use this.
using Int = boost::multiprecision::cpp_int;

/// Exact rational scalar for the oracles. Sign extraction must never hit
/// floating-point ambiguity.
using Rational = boost::multiprecision::cpp_rational;

}  // namespace lch

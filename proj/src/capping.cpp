#include "lch/capping.hpp"

namespace lch {

namespace {
int mod2(long long v) { return int(((v % 2) + 2) % 2); }
}  // namespace

CappingParities cappingParities(int grading, Polarity polarity, CappingSystemParams params) {
  if (polarity == Polarity::Positive)
    return {0, mod2((long long)grading + params.n + params.dA + 1)};
  return {1, mod2(grading)};
}

Sign gluedCappingSign(int grading, CappingSystemParams params) {
  return signPow((long long)grading + params.n + params.dA + 1);
}

}  // namespace lch

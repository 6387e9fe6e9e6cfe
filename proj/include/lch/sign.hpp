#pragma once

#include <cstdint>
#include <optional>
#include <ostream>

namespace lch {

/// An element of the multiplicative group {+1, -1}.
///
/// Orientations of formal vector spaces are stored as signs relative to a
/// fixed per-label reference basis, so this type is the currency of the
/// whole library.
class Sign {
 public:
  /// Defaults to +1.
  constexpr Sign() = default;

  static constexpr Sign plus() { return Sign(false); }
  static constexpr Sign minus() { return Sign(true); }

  /// (-1)^k.
  static constexpr Sign fromParity(long long k) { return Sign((k % 2) != 0); }

  /// Accepts exactly +1 or -1.
  static constexpr std::optional<Sign> fromInt(int v) {
    if (v == 1) return plus();
    if (v == -1) return minus();
    return std::nullopt;
  }

  constexpr int value() const { return negative_ ? -1 : 1; }
  constexpr bool isPositive() const { return !negative_; }

  /// Exponent in {0,1} with (-1)^parity() == *this.
  constexpr int parity() const { return negative_ ? 1 : 0; }

  friend constexpr Sign operator*(Sign a, Sign b) {
    return Sign(a.negative_ != b.negative_);
  }
  Sign& operator*=(Sign other) {
    negative_ = (negative_ != other.negative_);
    return *this;
  }
  friend constexpr bool operator==(Sign a, Sign b) = default;

  friend std::ostream& operator<<(std::ostream& os, Sign s) {
    return os << (s.negative_ ? "-1" : "+1");
  }

 private:
  constexpr explicit Sign(bool negative) : negative_(negative) {}
  bool negative_ = false;
};

/// (-1)^exponent, the form the closed-form sign expressions take.
constexpr Sign signPow(long long exponent) { return Sign::fromParity(exponent); }

}  // namespace lch

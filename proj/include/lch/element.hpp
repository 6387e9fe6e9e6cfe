#pragma once

#include <map>
#include <string>
#include <vector>

#include "lch/rational.hpp"
#include "lch/sign.hpp"

namespace lch {

using ChordName = std::string;

/// A generator: a Reeb chord with its integer grading.
struct Chord {
  ChordName name;
  int grading = 0;
  friend bool operator==(const Chord&, const Chord&) = default;
  friend auto operator<=>(const Chord&, const Chord&) = default;
};

/// A word in chord names. The empty word is the unit of the algebra.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<ChordName> factors) : factors_(std::move(factors)) {}
  static Word unit() { return Word(); }
  static Word single(ChordName name) { return Word({std::move(name)}); }

  const std::vector<ChordName>& factors() const { return factors_; }
  bool isUnit() const { return factors_.empty(); }
  std::size_t length() const { return factors_.size(); }
  bool contains(const ChordName& name) const;

  Word operator*(const Word& other) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

  std::string toString() const;

 private:
  std::vector<ChordName> factors_;
};

/// An element of the free unital noncommutative algebra over Z: a finite
/// map from words to nonzero integer coefficients.
class Element {
 public:
  Element() = default;

  static Element zero() { return Element(); }
  static Element unit(Int coefficient = 1);
  static Element chord(ChordName name, Int coefficient = 1);
  static Element term(Word word, Int coefficient);

  bool isZero() const { return terms_.empty(); }
  const std::map<Word, Int>& terms() const { return terms_; }
  std::size_t termCount() const { return terms_.size(); }

  /// Coefficient of a word, zero when the word is absent.
  Int coefficient(const Word& word) const;

  Element operator+(const Element& other) const;
  Element operator-(const Element& other) const;
  Element operator-() const;
  Element operator*(const Element& other) const;
  Element& operator+=(const Element& other);

  friend Element operator*(const Int& scalar, const Element& element);
  friend Element operator*(Sign sign, const Element& element);

  friend bool operator==(const Element&, const Element&) = default;

  /// Coefficients reduced mod 2 into {0, 1}; the view used to compare Z
  /// results against mod-2 expectations.
  Element mod2() const;

  std::string toString() const;

 private:
  void addTerm(const Word& word, const Int& coefficient);
  std::map<Word, Int> terms_;
};

}  // namespace lch

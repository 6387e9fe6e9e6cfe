#include "lch/element.hpp"

#include <algorithm>
#include <sstream>

namespace lch {

bool Word::contains(const ChordName& name) const {
  return std::find(factors_.begin(), factors_.end(), name) != factors_.end();
}

Word Word::operator*(const Word& other) const {
  std::vector<ChordName> combined = factors_;
  combined.insert(combined.end(), other.factors_.begin(), other.factors_.end());
  return Word(std::move(combined));
}

std::string Word::toString() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += "*";
    out += factors_[i];
  }
  return out;
}

Element Element::unit(Int coefficient) { return term(Word::unit(), std::move(coefficient)); }

Element Element::chord(ChordName name, Int coefficient) {
  return term(Word::single(std::move(name)), std::move(coefficient));
}

Element Element::term(Word word, Int coefficient) {
  Element e;
  e.addTerm(word, coefficient);
  return e;
}

Int Element::coefficient(const Word& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? Int(0) : it->second;
}

void Element::addTerm(const Word& word, const Int& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(word, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Element Element::operator+(const Element& other) const {
  Element out = *this;
  out += other;
  return out;
}

Element& Element::operator+=(const Element& other) {
  for (const auto& [word, coeff] : other.terms_) addTerm(word, coeff);
  return *this;
}

Element Element::operator-(const Element& other) const { return *this + (-other); }

Element Element::operator-() const {
  Element out;
  for (const auto& [word, coeff] : terms_) out.terms_.emplace(word, -coeff);
  return out;
}

Element Element::operator*(const Element& other) const {
  Element out;
  for (const auto& [wa, ca] : terms_)
    for (const auto& [wb, cb] : other.terms_) out.addTerm(wa * wb, ca * cb);
  return out;
}

Element operator*(const Int& scalar, const Element& element) {
  Element out;
  if (scalar == 0) return out;
  for (const auto& [word, coeff] : element.terms_) out.terms_.emplace(word, scalar * coeff);
  return out;
}

Element operator*(Sign sign, const Element& element) {
  return Int(sign.value()) * element;
}

Element Element::mod2() const {
  Element out;
  for (const auto& [word, coeff] : terms_)
    if (coeff % 2 != 0) out.terms_.emplace(word, 1);
  return out;
}

std::string Element::toString() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [word, coeff] : terms_) {
    if (!first) os << (coeff > 0 ? " + " : " - ");
    else if (coeff < 0) os << "-";
    first = false;
    const Int magnitude = abs(coeff);
    if (word.isUnit()) {
      os << magnitude.str();
    } else {
      if (magnitude != 1) os << magnitude.str() << "*";
      os << word.toString();
    }
  }
  return os.str();
}

}  // namespace lch

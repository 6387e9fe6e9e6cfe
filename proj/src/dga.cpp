#include "lch/dga.hpp"

#include <algorithm>
#include <stdexcept>

namespace lch {

Dga::Dga(std::vector<Chord> chords, std::map<ChordName, Element> diff)
    : chords_(std::move(chords)), diff_(std::move(diff)) {
  std::sort(chords_.begin(), chords_.end());
  for (std::size_t i = 1; i < chords_.size(); ++i)
    if (chords_[i - 1].name == chords_[i].name)
      throw std::invalid_argument("Dga: duplicate chord '" + chords_[i].name + "'");
  for (const auto& [name, element] : diff_) {
    if (!hasChord(name))
      throw std::invalid_argument("Dga: differential of unknown chord '" + name + "'");
    if (!containsAllChordsOf(element))
      throw std::invalid_argument("Dga: differential of '" + name +
                                  "' mentions an unknown chord");
  }
  // Normalize: drop explicit zeros so equality is presentation-independent.
  std::erase_if(diff_, [](const auto& entry) { return entry.second.isZero(); });
}

bool Dga::hasChord(const ChordName& name) const {
  return std::binary_search(chords_.begin(), chords_.end(), Chord{name, 0},
                            [](const Chord& a, const Chord& b) { return a.name < b.name; });
}

const Chord& Dga::chord(const ChordName& name) const {
  auto it = std::lower_bound(chords_.begin(), chords_.end(), Chord{name, 0},
                             [](const Chord& a, const Chord& b) { return a.name < b.name; });
  if (it == chords_.end() || it->name != name)
    throw std::invalid_argument("Dga: unknown chord '" + name + "'");
  return *it;
}

int Dga::grading(const ChordName& name) const { return chord(name).grading; }

const Element& Dga::diffOf(const ChordName& name) const {
  static const Element kZero;
  if (!hasChord(name)) throw std::invalid_argument("Dga: unknown chord '" + name + "'");
  auto it = diff_.find(name);
  return it == diff_.end() ? kZero : it->second;
}

int Dga::wordGrading(const Word& word) const {
  int total = 0;
  for (const auto& name : word.factors()) total += grading(name);
  return total;
}

std::optional<int> Dga::homogeneousGrading(const Element& element) const {
  std::optional<int> result;
  for (const auto& [word, coeff] : element.terms()) {
    const int g = wordGrading(word);
    if (result && *result != g) return std::nullopt;
    result = g;
  }
  return result;
}

bool Dga::containsAllChordsOf(const Element& element) const {
  for (const auto& [word, coeff] : element.terms())
    for (const auto& name : word.factors())
      if (!hasChord(name)) return false;
  return true;
}

Dga Dga::mod2() const {
  std::map<ChordName, Element> reduced;
  for (const auto& [name, element] : diff_) {
    Element r = element.mod2();
    if (!r.isZero()) reduced.emplace(name, std::move(r));
  }
  return Dga(chords_, std::move(reduced));
}

Element leibnizExtend(const Dga& dga, const Element& element) {
  if (!dga.containsAllChordsOf(element))
    throw std::invalid_argument("leibnizExtend: element mentions an unknown chord");
  Element result;
  for (const auto& [word, coeff] : element.terms()) {
    // d(c_1 ... c_k) = sum_i (-1)^{|c_1...c_{i-1}|} c_1...c_{i-1} d(c_i) rest.
    int prefixGrading = 0;
    for (std::size_t i = 0; i < word.length(); ++i) {
      const ChordName& name = word.factors()[i];
      const Element& dci = dga.diffOf(name);
      if (!dci.isZero()) {
        const Word prefix(std::vector<ChordName>(word.factors().begin(),
                                                 word.factors().begin() + i));
        const Word suffix(std::vector<ChordName>(word.factors().begin() + i + 1,
                                                 word.factors().end()));
        const Int signedCoeff = coeff * signPow(prefixGrading).value();
        result += signedCoeff * (Element::term(prefix, 1) * dci * Element::term(suffix, 1));
      }
      prefixGrading += dga.grading(name);
    }
  }
  return result;
}

std::vector<std::pair<ChordName, Element>> dSquaredReport(const Dga& dga) {
  std::vector<std::pair<ChordName, Element>> failures;
  for (const auto& chord : dga.chords()) {
    Element square = leibnizExtend(dga, dga.diffOf(chord.name));
    if (!square.isZero()) failures.emplace_back(chord.name, std::move(square));
  }
  return failures;
}

std::vector<GradingViolation> gradingValidate(const Dga& dga) {
  std::vector<GradingViolation> violations;
  for (const auto& chord : dga.chords()) {
    const int expected = chord.grading - 1;
    for (const auto& [word, coeff] : dga.diffOf(chord.name).terms()) {
      const int found = dga.wordGrading(word);
      if (found != expected) violations.push_back({chord.name, word, expected, found});
    }
  }
  return violations;
}

namespace {

Element substituteChord(const Element& element, const ChordName& target,
                        const Element& replacement) {
  Element result;
  for (const auto& [word, coeff] : element.terms()) {
    Element built = Element::unit(1);
    for (const auto& name : word.factors())
      built = built * (name == target ? replacement : Element::chord(name));
    result += coeff * built;
  }
  return result;
}

Dga applySubstitution(const Dga& dga, const SubstitutionMove& move) {
  if (!dga.hasChord(move.chord))
    throw std::invalid_argument("tame move: unknown chord '" + move.chord + "'");
  for (const auto& [word, coeff] : move.addend.terms())
    if (word.contains(move.chord))
      throw std::invalid_argument("tame move: addend references the replaced generator");
  if (!dga.containsAllChordsOf(move.addend))
    throw std::invalid_argument("tame move: addend mentions an unknown chord");

  // e(a) = s a + v, e(x) = x elsewhere; the new differential is e d e^{-1}.
  const Element image = move.sign * Element::chord(move.chord) + move.addend;
  auto applyE = [&](const Element& element) {
    return substituteChord(element, move.chord, image);
  };

  std::map<ChordName, Element> newDiff;
  for (const auto& chord : dga.chords()) {
    Element transformed;
    if (chord.name == move.chord) {
      // e(d(e^{-1} a)) = s e(d a) - s e(d v).
      transformed = move.sign * (applyE(dga.diffOf(move.chord)) -
                                 applyE(leibnizExtend(dga, move.addend)));
    } else {
      transformed = applyE(dga.diffOf(chord.name));
    }
    if (!transformed.isZero()) newDiff.emplace(chord.name, std::move(transformed));
  }
  return Dga(dga.chords(), std::move(newDiff));
}

Dga applyStabilization(const Dga& dga, const StabilizationMove& move) {
  if (dga.hasChord(move.x) || dga.hasChord(move.y) || move.x == move.y)
    throw std::invalid_argument("tame move: stabilization chords must be fresh");
  auto chords = dga.chords();
  chords.push_back({move.x, move.gradingX});
  chords.push_back({move.y, move.gradingX - 1});
  auto diff = dga.diff();
  diff.emplace(move.x, Element::chord(move.y));
  return Dga(std::move(chords), std::move(diff));
}

}  // namespace

Dga applyTameMoves(const Dga& seed, std::span<const TameMove> moves) {
  Dga current = seed;
  for (const auto& move : moves)
    current = std::visit(
        [&](const auto& m) -> Dga {
          if constexpr (std::is_same_v<std::decay_t<decltype(m)>, SubstitutionMove>)
            return applySubstitution(current, m);
          else
            return applyStabilization(current, m);
        },
        move);
  return current;
}

}  // namespace lch

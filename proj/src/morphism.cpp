#include "lch/morphism.hpp"

#include <stdexcept>

namespace lch {

DgaMorphism::DgaMorphism(Dga source, Dga target, std::map<ChordName, Element> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  for (const auto& [name, image] : images_) {
    if (!source_.hasChord(name))
      throw std::invalid_argument("DgaMorphism: image of unknown chord '" + name + "'");
    if (!target_.containsAllChordsOf(image))
      throw std::invalid_argument("DgaMorphism: image of '" + name +
                                  "' mentions a chord outside the target");
  }
  for (const auto& chord : source_.chords())
    if (!images_.count(chord.name)) {
      if (!target_.hasChord(chord.name))
        throw std::invalid_argument("DgaMorphism: no image for chord '" + chord.name + "'");
      images_.emplace(chord.name, Element::chord(chord.name));
    }
}

const Element& DgaMorphism::imageOf(const ChordName& name) const {
  auto it = images_.find(name);
  if (it == images_.end())
    throw std::invalid_argument("DgaMorphism: unknown chord '" + name + "'");
  return it->second;
}

Element morphismApply(const DgaMorphism& phi, const Element& element) {
  if (!phi.source().containsAllChordsOf(element))
    throw std::invalid_argument("morphismApply: element mentions an unknown chord");
  Element result;
  for (const auto& [word, coeff] : element.terms()) {
    Element image = Element::unit(1);
    for (const auto& name : word.factors()) image = image * phi.imageOf(name);
    result += coeff * image;
  }
  return result;
}

ChainMapReport checkChainMap(const DgaMorphism& phi) {
  ChainMapReport report;
  for (const auto& chord : phi.source().chords()) {
    const Element lhs = morphismApply(phi, phi.source().diffOf(chord.name));
    const Element rhs = leibnizExtend(phi.target(), phi.imageOf(chord.name));
    if (!(lhs == rhs)) {
      report.ok = false;
      report.offending.push_back(chord.name);
    }
  }
  return report;
}

std::vector<GradingViolation> gradingValidate(const DgaMorphism& phi) {
  std::vector<GradingViolation> violations;
  for (const auto& chord : phi.source().chords()) {
    for (const auto& [word, coeff] : phi.imageOf(chord.name).terms()) {
      const int found = phi.target().wordGrading(word);
      if (found != chord.grading)
        violations.push_back({chord.name, word, chord.grading, found});
    }
  }
  return violations;
}

DgaMorphism compose(const DgaMorphism& later, const DgaMorphism& first) {
  if (!(first.target() == later.source()))
    throw std::invalid_argument("compose: middle DGAs do not match");
  std::map<ChordName, Element> images;
  for (const auto& chord : first.source().chords())
    images.emplace(chord.name, morphismApply(later, first.imageOf(chord.name)));
  return DgaMorphism(first.source(), later.target(), std::move(images));
}

DgaMorphism identityMorphism(const Dga& dga) {
  std::map<ChordName, Element> images;
  for (const auto& chord : dga.chords()) images.emplace(chord.name, Element::chord(chord.name));
  return DgaMorphism(dga, dga, std::move(images));
}

std::pair<DgaMorphism, Dga> cappingChangeMorphism(const Dga& dga,
                                                  const std::map<ChordName, Sign>& signs) {
  auto signOf = [&](const ChordName& name) {
    auto it = signs.find(name);
    return it == signs.end() ? Sign::plus() : it->second;
  };
  for (const auto& [name, sign] : signs)
    if (!dga.hasChord(name))
      throw std::invalid_argument("cappingChangeMorphism: unknown chord '" + name + "'");

  // d' = phi o d o phi^{-1} with phi(a) = sign(a) a, and phi^{-1} = phi.
  auto conjugateElement = [&](const Element& element) {
    Element out;
    for (const auto& [word, coeff] : element.terms()) {
      Sign wordSign;
      for (const auto& name : word.factors()) wordSign *= signOf(name);
      out += (wordSign.value() * coeff) * Element::term(word, 1);
    }
    return out;
  };

  std::map<ChordName, Element> newDiff;
  for (const auto& chord : dga.chords()) {
    Element image = signOf(chord.name) * conjugateElement(dga.diffOf(chord.name));
    if (!image.isZero()) newDiff.emplace(chord.name, std::move(image));
  }
  Dga conjugated(dga.chords(), std::move(newDiff));

  std::map<ChordName, Element> images;
  for (const auto& chord : dga.chords())
    images.emplace(chord.name, signOf(chord.name) * Element::chord(chord.name));
  DgaMorphism phi(dga, conjugated, std::move(images));
  return {std::move(phi), std::move(conjugated)};
}

}  // namespace lch

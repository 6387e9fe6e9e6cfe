#include "lch/augmentation.hpp"

#include <algorithm>
#include <stdexcept>

namespace lch {

namespace {

void validateSupport(const Dga& dga, const Augmentation& aug) {
  for (const auto& [name, value] : aug.values) {
    if (!dga.hasChord(name))
      throw std::invalid_argument("augmentation: unknown chord '" + name + "'");
    if (value != 0 && dga.grading(name) != 0)
      throw std::invalid_argument("augmentation: nonzero on chord '" + name +
                                  "' of nonzero grading");
  }
}

Int augmentWord(const Augmentation& aug, const Word& word) {
  Int value = 1;
  for (const auto& name : word.factors()) {
    value *= aug.valueOf(name);
    if (value == 0) break;
  }
  return value;
}

Int augmentElement(const Augmentation& aug, const Element& element) {
  Int total = 0;
  for (const auto& [word, coeff] : element.terms()) total += coeff * augmentWord(aug, word);
  return total;
}

}  // namespace

AugmentationReport augmentationCheck(const Dga& dga, const Augmentation& aug) {
  validateSupport(dga, aug);
  AugmentationReport report;
  for (const auto& chord : dga.chords()) {
    Int value = augmentElement(aug, dga.diffOf(chord.name));
    if (value != 0) {
      report.ok = false;
      report.nonzero.emplace_back(chord.name, std::move(value));
    }
  }
  return report;
}

MatQ LinearizedComplex::matrixFor(int grading) const {
  auto it = matrices_.find(grading);
  if (it != matrices_.end()) return it->second;
  auto rows = basis_.find(grading - 1);
  auto cols = basis_.find(grading);
  return MatQ(rows == basis_.end() ? 0 : int(rows->second.size()),
              cols == basis_.end() ? 0 : int(cols->second.size()));
}

std::map<int, int> LinearizedComplex::homologyRanks() const {
  std::map<int, int> ranks;
  for (const auto& [grading, chords] : basis_) {
    const int out = matrixFor(grading).rank();
    const int in = matrixFor(grading + 1).rank();
    ranks[grading] = int(chords.size()) - out - in;
  }
  return ranks;
}

bool LinearizedComplex::squaresToZero() const {
  for (const auto& [grading, chords] : basis_) {
    const MatQ upper = matrixFor(grading + 1);
    const MatQ lower = matrixFor(grading);
    if (lower.cols() == upper.rows() && lower.rows() > 0 && upper.cols() > 0)
      if (!(lower * upper).isZero()) return false;
  }
  return true;
}

LinearizedComplex linearizedDifferential(const Dga& dga, const Augmentation& aug) {
  const auto report = augmentationCheck(dga, aug);
  if (!report.ok)
    throw std::invalid_argument("linearizedDifferential: augmentation does not annihilate d");

  LinearizedComplex complex;
  std::map<ChordName, int> indexInGrading;
  for (const auto& chord : dga.chords())
    complex.basis_[chord.grading].push_back(chord.name);
  for (auto& [grading, names] : complex.basis_) {
    std::sort(names.begin(), names.end());
    for (std::size_t i = 0; i < names.size(); ++i) indexInGrading[names[i]] = int(i);
  }

  for (const auto& [grading, names] : complex.basis_) {
    auto rowsIt = complex.basis_.find(grading - 1);
    const int rows = rowsIt == complex.basis_.end() ? 0 : int(rowsIt->second.size());
    complex.matrices_.emplace(grading, MatQ(rows, int(names.size())));
  }

  // Conjugate by a -> a + aug(a) and keep the word-length-one part: for a
  // word c_1...c_k, each factor contributes its linear part once with the
  // other factors augmented.
  for (const auto& chord : dga.chords()) {
    MatQ& matrix = complex.matrices_.at(chord.grading);
    if (matrix.rows() == 0) continue;
    const int col = indexInGrading[chord.name];
    for (const auto& [word, coeff] : dga.diffOf(chord.name).terms()) {
      for (std::size_t i = 0; i < word.length(); ++i) {
        const ChordName& target = word.factors()[i];
        Int weight = coeff;
        for (std::size_t o = 0; o < word.length() && weight != 0; ++o)
          if (o != i) weight *= aug.valueOf(word.factors()[o]);
        if (weight == 0) continue;
        if (dga.grading(target) != chord.grading - 1) continue;  // reported elsewhere
        matrix.at(indexInGrading[target], col) += Rational(weight);
      }
    }
  }
  return complex;
}

}  // namespace lch

#include "lch/summand.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace lch {

Sign koszulPermutationSign(std::span<const int> dims, std::span<const int> perm) {
  if (dims.size() != perm.size())
    throw std::invalid_argument("koszulPermutationSign: size mismatch");
  std::vector<bool> seen(perm.size(), false);
  for (int p : perm) {
    if (p < 0 || p >= int(perm.size()) || seen[p])
      throw std::invalid_argument("koszulPermutationSign: not a permutation");
    seen[p] = true;
  }
  long long exponent = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) exponent += (long long)dims[perm[i]] * dims[perm[j]];
  return Sign::fromParity(exponent);
}

SummandColumn::SummandColumn(std::vector<FormalSummand> summands, Sign sign)
    : summands_(std::move(summands)), sign_(sign) {
  std::unordered_set<std::string> labels;
  for (const auto& s : summands_) {
    if (s.dim < 0) throw std::invalid_argument("SummandColumn: negative dimension");
    if (s.dim == 0 && s.orient == Sign::minus())
      throw std::invalid_argument("SummandColumn: zero-dimensional summand must carry +1");
    if (!labels.insert(s.label).second)
      throw std::invalid_argument("SummandColumn: duplicate label '" + s.label + "'");
  }
}

int SummandColumn::totalDim() const {
  int total = 0;
  for (const auto& s : summands_) total += s.dim;
  return total;
}

std::vector<int> SummandColumn::dims() const {
  std::vector<int> out;
  out.reserve(summands_.size());
  for (const auto& s : summands_) out.push_back(s.dim);
  return out;
}

std::vector<std::string> SummandColumn::labels() const {
  std::vector<std::string> out;
  out.reserve(summands_.size());
  for (const auto& s : summands_) out.push_back(s.label);
  return out;
}

bool SummandColumn::hasLabel(const std::string& label) const {
  return std::any_of(summands_.begin(), summands_.end(),
                     [&](const FormalSummand& s) { return s.label == label; });
}

int SummandColumn::indexOf(const std::string& label) const {
  for (std::size_t i = 0; i < summands_.size(); ++i)
    if (summands_[i].label == label) return int(i);
  throw std::invalid_argument("SummandColumn: unknown label '" + label + "'");
}

Sign SummandColumn::orientationProduct() const {
  Sign s;
  for (const auto& summand : summands_) s *= summand.orient;
  return s;
}

std::pair<SummandColumn, Sign> blockReorderSign(const SummandColumn& column,
                                                std::span<const std::string> targetOrder) {
  if (targetOrder.size() != column.size())
    throw std::invalid_argument("blockReorderSign: target order has wrong length");
  std::unordered_map<std::string, int> position;
  for (std::size_t i = 0; i < column.size(); ++i) position[column[i].label] = int(i);
  std::vector<int> perm;
  perm.reserve(targetOrder.size());
  std::unordered_set<std::string> used;
  for (const auto& label : targetOrder) {
    auto it = position.find(label);
    if (it == position.end())
      throw std::invalid_argument("blockReorderSign: unknown label '" + label + "'");
    if (!used.insert(label).second)
      throw std::invalid_argument("blockReorderSign: duplicate label '" + label + "'");
    perm.push_back(it->second);
  }
  const std::vector<int> dims = column.dims();
  const Sign cost = koszulPermutationSign(dims, perm);

  SummandColumn result;
  result.summands_.reserve(column.size());
  for (int p : perm) result.summands_.push_back(column[p]);
  result.sign_ = column.sign() * cost;
  return {std::move(result), cost};
}

}  // namespace lch

#include "lch/exact_sequence.hpp"

#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace lch {

namespace {

// Validates one leg of the identification data: every `from` label names a
// distinct block of `source`, every `to` a distinct block of `target`, with
// matching dimensions and +1 signs on zero-dimensional blocks.
void checkLeg(const char* name, const std::vector<BlockMap>& leg, const SummandColumn& source,
              const SummandColumn& target) {
  std::unordered_set<std::string> froms, tos;
  for (const auto& m : leg) {
    if (!froms.insert(m.from).second)
      throw std::invalid_argument(std::string(name) + ": block '" + m.from + "' mapped twice");
    if (!tos.insert(m.to).second)
      throw std::invalid_argument(std::string(name) + ": block '" + m.to + "' hit twice");
    const auto& src = source[source.indexOf(m.from)];
    const auto& dst = target[target.indexOf(m.to)];
    if (src.dim != dst.dim)
      throw std::invalid_argument(std::string(name) + ": dimension mismatch on '" + m.from +
                                  "' -> '" + m.to + "'");
    if (src.dim == 0 && m.sign == Sign::minus())
      throw std::invalid_argument(std::string(name) + ": sign on zero-dimensional block");
  }
}

struct TransportParts {
  Sign reorderW1;
  Sign reorderW2;
  Sign mapSigns;
};

TransportParts computeParts(const ExactSequenceData& data) {
  checkLeg("alpha", data.alpha, data.v1, data.w1);
  checkLeg("beta", data.beta, data.w1, data.w2);
  checkLeg("gamma", data.gamma, data.w2, data.v2);

  std::unordered_map<std::string, const BlockMap*> alphaByV1, betaByW1, gammaByTarget;
  for (const auto& m : data.alpha) alphaByV1[m.from] = &m;
  for (const auto& m : data.beta) betaByW1[m.from] = &m;
  for (const auto& m : data.gamma) gammaByTarget[m.to] = &m;

  if (alphaByV1.size() != data.v1.size())
    throw std::invalid_argument("exact sequence: alpha must cover every V1 block");
  if (gammaByTarget.size() != data.v2.size())
    throw std::invalid_argument("exact sequence: gamma must cover every V2 block");

  std::unordered_set<std::string> alphaImage;
  for (const auto& m : data.alpha) alphaImage.insert(m.to);

  // W1 in recipe order: alpha images in V1 order, then the complement in
  // its stored order.
  std::vector<std::string> w1Target;
  Sign mapSigns;
  for (const auto& s : data.v1.summands()) {
    const BlockMap* m = alphaByV1.at(s.label);
    w1Target.push_back(m->to);
    mapSigns *= m->sign;
  }
  std::vector<std::string> complement;
  for (const auto& s : data.w1.summands())
    if (!alphaImage.count(s.label)) complement.push_back(s.label);
  for (const auto& label : complement) {
    if (!betaByW1.count(label))
      throw std::invalid_argument("exact sequence: beta misses complement block '" + label + "'");
    w1Target.push_back(label);
  }
  if (betaByW1.size() != complement.size())
    throw std::invalid_argument("exact sequence: beta must map exactly the complement of alpha");

  // W2 in recipe order: gamma sources in V2 order, then beta images in
  // complement order. Together they must exhaust W2.
  std::vector<std::string> w2Target;
  std::unordered_set<std::string> covered;
  std::unordered_map<std::string, const BlockMap*> gammaByV2;
  for (const auto& m : data.gamma) gammaByV2[m.to] = &m;
  for (const auto& s : data.v2.summands()) {
    const BlockMap* m = gammaByV2.at(s.label);
    w2Target.push_back(m->from);
    covered.insert(m->from);
    mapSigns *= m->sign;
  }
  for (const auto& label : complement) {
    const BlockMap* m = betaByW1.at(label);
    w2Target.push_back(m->to);
    covered.insert(m->to);
    mapSigns *= m->sign;
  }
  if (covered.size() != data.w2.size() || w2Target.size() != data.w2.size())
    throw std::invalid_argument("exact sequence: beta and gamma must exhaust W2");

  const Sign r1 = blockReorderSign(data.w1, w1Target).second;
  const Sign r2 = blockReorderSign(data.w2, w2Target).second;
  return {r1, r2, mapSigns};
}

}  // namespace

Sign exactSequenceCouplingSign(const ExactSequenceData& data) {
  const TransportParts parts = computeParts(data);
  return parts.reorderW1 * parts.reorderW2 * parts.mapSigns;
}

Sign exactSequenceTransport(const ExactSequenceData& data,
                            const ExactSequenceOrientations& oriented) {
  if (oriented.w1.has_value() == oriented.w2.has_value())
    throw std::invalid_argument("exactSequenceTransport: exactly one of w1/w2 must be given");
  const Sign coupling = exactSequenceCouplingSign(data);
  const Sign known = oriented.w1 ? *oriented.w1 : *oriented.w2;
  // or(W1) * or(W2) = or(V1) * or(V2) * coupling, so the open side is the
  // product of everything else.
  return oriented.v1 * oriented.v2 * coupling * known;
}

Sign exactSequenceTransportToV1(const ExactSequenceData& data, Sign w1, Sign w2, Sign v2) {
  const Sign coupling = exactSequenceCouplingSign(data);
  return w1 * w2 * v2 * coupling;
}

}  // namespace lch

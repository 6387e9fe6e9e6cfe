#include "lch/conformal.hpp"

#include <stdexcept>

#include "lch/matrix.hpp"

namespace lch {

PunctureVector PunctureVector::unit(int puncture, Sign sign) {
  PunctureVector v;
  v.coords[puncture] = sign.value();
  return v;
}

ConformalModel::ConformalModel(std::vector<Rational> params) : params_(std::move(params)) {
  if (params_.size() < 3)
    throw std::invalid_argument("ConformalModel: need at least three punctures");
  for (std::size_t i = 1; i < params_.size(); ++i)
    if (!(params_[i - 1] < params_[i]))
      throw std::invalid_argument("ConformalModel: parameters must be strictly increasing");
}

ConformalModel ConformalModel::regular(int m) {
  std::vector<Rational> params;
  for (int i = 0; i <= m; ++i) params.emplace_back(i);
  return ConformalModel(std::move(params));
}

std::vector<PunctureVector> ConformalModel::defaultBasis() const {
  std::vector<PunctureVector> basis;
  for (int i = m(); i >= 3; --i) basis.push_back(PunctureVector::unit(i));
  return basis;
}

std::optional<Sign> ConformalModel::orientationVsDefault(
    const std::vector<PunctureVector>& vectors) const {
  return compare(vectors, defaultBasis());
}

std::optional<Sign> ConformalModel::compare(const std::vector<PunctureVector>& a,
                                            const std::vector<PunctureVector>& b) const {
  const int points = punctureCount();
  if (int(a.size()) != points - 3 || int(b.size()) != points - 3)
    throw std::invalid_argument("ConformalModel::compare: wrong number of vectors");

  // det[1, t, t^2 | columns]; both lists against the same automorphism
  // block, so the quotient-orientation comparison is the product of signs.
  auto buildDet = [&](const std::vector<PunctureVector>& cols) -> std::optional<Sign> {
    MatQ mat(points, points);
    for (int i = 0; i < points; ++i) {
      mat.at(i, 0) = 1;
      mat.at(i, 1) = params_[i];
      mat.at(i, 2) = params_[i] * params_[i];
    }
    for (int c = 0; c < int(cols.size()); ++c)
      for (const auto& [puncture, coeff] : cols[c].coords) {
        if (puncture < 0 || puncture >= points)
          throw std::invalid_argument("ConformalModel::compare: puncture out of range");
        mat.at(puncture, 3 + c) = coeff;
      }
    return mat.detSign();
  };

  const auto da = buildDet(a);
  const auto db = buildDet(b);
  if (!da || !db) return std::nullopt;
  return *da * *db;
}

std::vector<PunctureVector> alternativeFixedBasis(int m, int j, int k) {
  if (!(0 < j && j < k && k <= m))
    throw std::invalid_argument("alternativeFixedBasis: need 0 < j < k <= m");
  std::vector<PunctureVector> basis;
  for (int i = m; i > k; --i) basis.push_back(PunctureVector::unit(i));
  for (int i = k - 1; i > j; --i) basis.push_back(PunctureVector::unit(i, Sign::minus()));
  for (int i = j - 1; i >= 1; --i) basis.push_back(PunctureVector::unit(i));
  return basis;
}

ConformalSlot ConformalSlot::defaults(int m) {
  return ConformalSlot(m, ConformalModel::regular(m).defaultBasis(), Sign::plus());
}

ConformalSlot ConformalSlot::withBasis(int m, std::vector<PunctureVector> basis) {
  const auto sign = ConformalModel::regular(m).orientationVsDefault(basis);
  if (!sign)
    throw std::invalid_argument("ConformalSlot: vectors do not give a basis");
  return ConformalSlot(m, std::move(basis), *sign);
}

namespace {

struct GluedLayout {
  // Position of p_i (i != k) and q_i in the glued puncture list.
  std::vector<int> pSlot;  // index 0..m2, slot for p_i; slot of p_k unused
  std::vector<int> qSlot;  // index 1..m1
};

GluedLayout layoutFor(int m1, int m2, int k) {
  GluedLayout layout;
  layout.pSlot.assign(m2 + 1, -1);
  layout.qSlot.assign(m1 + 1, -1);
  for (int i = 0; i < k; ++i) layout.pSlot[i] = i;
  for (int i = 1; i <= m1; ++i) layout.qSlot[i] = k - 1 + i;
  for (int i = k + 1; i <= m2; ++i) layout.pSlot[i] = i + m1 - 1;
  return layout;
}

// Glued-disk model with the q-cluster on a short arc where p_k used to sit.
ConformalModel clusterModel(int m1, int m2, int k, const Rational& clusterWidth) {
  std::vector<Rational> params;
  for (int i = 0; i < k; ++i) params.emplace_back(i);
  for (int i = 1; i <= m1; ++i)
    params.emplace_back(Rational(k - 1) + clusterWidth * i / (m1 + 1));
  for (int i = k + 1; i <= m2; ++i) params.emplace_back(i);
  return ConformalModel(std::move(params));
}

PunctureVector normalVector(int m1, int m2, int k, const GluedLayout& layout,
                            NormalRealization normal) {
  switch (normal) {
    case NormalRealization::FirstClusterPuncture:
      return PunctureVector::unit(layout.qSlot[1]);
    case NormalRealization::MinusPrecedingPuncture:
      return PunctureVector::unit(k == 1 ? 0 : layout.pSlot[k - 1], Sign::minus());
    case NormalRealization::FollowingPuncture:
      if (k >= m2) throw std::invalid_argument("conformalGlueLedger: no puncture after the cluster");
      return PunctureVector::unit(layout.pSlot[k + 1]);
    case NormalRealization::MinusLastClusterPuncture:
      return PunctureVector::unit(layout.qSlot[m1], Sign::minus());
  }
  throw std::logic_error("conformalGlueLedger: unknown realization");
}

std::optional<Sign> ledgerSignWith(int m1, int m2, int k, const ConformalModel& model,
                                   const GluedLayout& layout, NormalRealization normal) {
  std::vector<PunctureVector> combined;

  // Default basis of the top disk, lifted. Moving the attachment puncture
  // p_k moves the whole cluster at equal angular speed, which in the
  // tan-half-angle coordinate weights each q by 1 + t^2.
  for (int i = m2; i >= 3; --i) {
    if (i != k) {
      combined.push_back(PunctureVector::unit(layout.pSlot[i]));
    } else {
      // Any positive weights give the same determinant sign: all cluster
      // components except q_2's are absorbed by other columns of the list.
      PunctureVector cluster;
      for (int q = 1; q <= m1; ++q) cluster.coords[layout.qSlot[q]] = 1;
      combined.push_back(cluster);
    }
  }
  // Default basis of the bottom disk, lifted puncture by puncture.
  for (int i = m1; i >= 3; --i) combined.push_back(PunctureVector::unit(layout.qSlot[i]));
  // Outward normal last.
  combined.push_back(normalVector(m1, m2, k, layout, normal));

  return model.orientationVsDefault(combined);
}

}  // namespace

std::optional<Sign> conformalGlueLedger(int m1, int m2, int k, NormalRealization normal) {
  if (m1 < 2 || m2 < 2)
    throw std::invalid_argument("conformalGlueLedger: both disks need at least two negative punctures");
  if (k < 1 || k > m2) throw std::invalid_argument("conformalGlueLedger: k out of range");
  const GluedLayout layout = layoutFor(m1, m2, k);
  return ledgerSignWith(m1, m2, k, clusterModel(m1, m2, k, Rational(1, 4)), layout, normal);
}

ConformalGlueResult conformalGlueSign(int m1, int m2, int k) {
  if (m1 < 2 || m2 < 2)
    throw std::invalid_argument("conformalGlueSign: both disks need at least two negative punctures");
  if (k < 1 || k > m2) throw std::invalid_argument("conformalGlueSign: k out of range");

  const Sign closed = signPow((long long)(m1 - 1) * k + 1);
  const GluedLayout layout = layoutFor(m1, m2, k);

  // Evaluate near the boundary stratum and check stability under shrinking
  // the cluster; a flip across widths would mean the reconstruction failed.
  const auto narrow = ledgerSignWith(m1, m2, k, clusterModel(m1, m2, k, Rational(1, 4)),
                                     layout, NormalRealization::FirstClusterPuncture);
  const auto narrower = ledgerSignWith(m1, m2, k, clusterModel(m1, m2, k, Rational(1, 16)),
                                       layout, NormalRealization::FirstClusterPuncture);
  if (!narrow || !narrower)
    throw std::logic_error("conformalGlueSign: lifted vectors degenerate in the model");

  ConformalGlueResult result;
  result.closedForm = closed;
  result.ledger = *narrow;
  result.agree = (*narrow == closed) && (*narrower == closed);
  return result;
}

}  // namespace lch

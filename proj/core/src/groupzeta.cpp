#include "mvz/groupzeta.hpp"

#include "mvz/errors.hpp"

namespace mvz {

ConeData ConeData::from_pairs(std::vector<std::pair<Integer, Integer>> pairs) {
  if (pairs.empty()) throw InvalidInput("cone data needs at least one pair");
  for (const auto& [a, b] : pairs) {
    if (a < 0 || b < 0) throw InvalidInput("cone data entries must be nonnegative");
    if (a == 0 && b == 0) throw InvalidInput("cone data pair (0, 0) is not allowed");
  }
  return ConeData{std::move(pairs)};
}

LeadingPole leading_pole(const ConeData& d) {
  LeadingPole r;
  for (const auto& [a, b] : d.pairs) {
    if (a <= 0) continue;
    Rational alpha(Integer(1 - b), a);
    alpha.canonicalize();
    if (!r.alpha0 || alpha > *r.alpha0) {
      r.alpha0 = alpha;
      r.m0 = 1;
    } else if (alpha == *r.alpha0) {
      ++r.m0;
    }
  }
  return r;
}

UniformBoundary uniform_boundary(const SparseSeries& h) {
  if (h.constant_term() != 1) throw ConstantTermNotOne();
  UniformBoundary r;
  BetaPair b = boundary_abscissas(h, 0);
  r.beta0 = b.beta0;
  r.beta1 = b.beta1;
  r.equal = r.beta0 == r.beta1;
  return r;
}

SparseSeries gsp6_polynomial() {
  SparseSeries h = SparseSeries::one(2);
  for (std::uint32_t k = 1; k <= 4; ++k) h.add_term(ExponentVector({k, 1}), 1);
  h.add_term(ExponentVector({5, 2}), 1);
  return h;
}

}  // namespace mvz

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mvz/euler_factor.hpp"
#include "mvz/numeric.hpp"
#include "mvz/series.hpp"

namespace mvz {

/// Numerical data (A_j, B_j) of a cone integral, one pair per divisor.
struct ConeData {
  std::vector<std::pair<Integer, Integer>> pairs;

  /// Throws InvalidInput on an empty list, negative entries or a (0, 0) pair.
  static ConeData from_pairs(std::vector<std::pair<Integer, Integer>> pairs);
};

struct LeadingPole {
  std::optional<Rational> alpha0;  ///< empty means -infinity
  std::uint64_t m0 = 0;
};

/// alpha_k = (1 - B_k) / A_k for A_k > 0; alpha0 is the maximum and m0 its multiplicity.
LeadingPole leading_pole(const ConeData& d);

struct UniformBoundary {
  Abscissa beta0;
  Abscissa beta1;
  bool equal = false;
};

/// Abscissas for a uniform bivariate h = 1 + H(X, Y) with the prime variable
/// X at index 0. Throws ZeroH when H = 0.
UniformBoundary uniform_boundary(const SparseSeries& h);

/// 1 + (X + X^2 + X^3 + X^4) Y + X^5 Y^2.
SparseSeries gsp6_polynomial();

}  // namespace mvz

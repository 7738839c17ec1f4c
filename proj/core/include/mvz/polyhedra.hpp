#pragma once

#include <map>
#include <set>
#include <vector>

#include "mvz/exponent.hpp"
#include "mvz/numeric.hpp"

namespace mvz {

/// Finite set of nonzero exponent vectors of a common dimension.
struct PointSet {
  std::size_t nvars = 0;
  std::set<ExponentVector> points;

  /// Throws InvalidInput on a zero point or a dimension mismatch.
  static PointSet from(std::size_t nvars, const std::vector<ExponentVector>& points);
};

struct Vertex {
  RationalVector coords;
  std::set<ExponentVector> contact;  ///< K(A; alpha)
  std::vector<std::size_t> zeros;    ///< J(alpha)
  std::size_t m = 0;                 ///< #contact + #zeros

  long degree(std::size_t nvars) const { return static_cast<long>(m) - static_cast<long>(nvars); }
};

/// P(A) = {x >= 0 : <x, nu> >= 1 for nu in A} with its index data.
struct DualPolyhedron {
  std::size_t nvars = 0;
  PointSet generators;
  Rational index;                 ///< iota(A)
  std::vector<RationalVector> R;  ///< vertices of minimal weight
  std::vector<Vertex> vertices;   ///< sorted lexicographically by coords

  const Vertex* find_vertex(const RationalVector& coords) const;
};

struct ParallelOptions {
  unsigned threads = 1;
};

std::set<ExponentVector> extremal_points(const PointSet& a);

DualPolyhedron dual(const PointSet& a, ParallelOptions options = {});

/// Throws NotInDual if alpha violates a constraint.
std::set<ExponentVector> contact_set(const PointSet& a, const RationalVector& alpha);

enum class ConeVerdict { Outside, Boundary, GenericInterior };

struct NormalConeResult {
  ConeVerdict verdict = ConeVerdict::Outside;
  Rational exponent;  ///< <gamma, alpha>
  long degree = 0;    ///< m(alpha) - nvars
  /// A strictly positive decomposition of gamma over the tight generators,
  /// present for GenericInterior.
  std::map<ExponentVector, Rational> contact_coefficients;
  std::map<std::size_t, Rational> zero_coefficients;
};

/// Requires gamma strictly positive; throws InvalidInput otherwise.
NormalConeResult normal_cone_test(const DualPolyhedron& p, const Vertex& alpha, const RationalVector& gamma);

/// min over nu in points of <nu, sigma>.
Rational min_pairing(const std::set<ExponentVector>& points, const RationalVector& sigma);

const char* to_string(ConeVerdict v);

}  // namespace mvz

#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mvz/exponent.hpp"
#include "mvz/polyhedra.hpp"
#include "mvz/series.hpp"

namespace mvz {

using Real = boost::multiprecision::cpp_bin_float_50;

/// d x n integer matrix given by rows.
struct ToricMatrix {
  std::size_t n = 0;
  std::vector<std::vector<long>> rows;

  /// Throws InvalidInput on ragged rows or n = 0.
  static ToricMatrix from_rows(std::vector<std::vector<long>> rows);

  std::size_t d() const noexcept { return rows.size(); }
  bool rows_sum_to_zero() const;
  ToricMatrix columns(const std::vector<std::size_t>& cols) const;
  /// A * nu
  std::vector<long> apply(const ExponentVector& nu) const;
};

/// The single row (1, ..., 1, -n) on n + 1 columns.
ToricMatrix matrix_An(unsigned n);

/// T(A; b) truncated at weight n, in graded-lex order.
std::vector<ExponentVector> kernel_monoid(const ToricMatrix& a, const std::vector<long>& b, std::uint64_t n);

/// F_A(m): 1 iff gcd(m) = 1 and prod m_i^{a_ji} = 1 for every row.
int invariant_indicator(const ToricMatrix& a, const std::vector<Integer>& m);

/// h = prod_{nu in K} (1 - X^nu)^{-c(nu)} * W.
struct Presentation {
  std::size_t nvars = 0;
  std::map<ExponentVector, unsigned> K;
  SparseSeries W;
  bool empty = false;  ///< T(A; b) is empty and h = 0

  static Presentation one(std::size_t nvars);
  static Presentation zero(std::size_t nvars);

  SparseSeries expand(std::uint64_t n) const;
  /// No (1 - X^nu) with nu in K divides W.
  bool is_reduced() const;
  /// Divides out every (1 - X^nu), nu in K, that divides W.
  void reduce();
};

struct PresentationOptions {
  /// Cap on enumeration nodes for bounded (kernel-free) subproblems.
  std::uint64_t enumeration_budget = 5'000'000;
};

/// Presentation of h_{A,b} = sum_{nu in T(A;b)} X^nu.
Presentation presentation(const ToricMatrix& a, const std::vector<long>& b, PresentationOptions options = {});

/// Presentation of h_A (T(A) = elements of T(A;0) with some zero coordinate),
/// obtained as (1 - X_1...X_n) h_{A,0} with the factor folded into W.
/// Requires zero row sums.
Presentation restricted_presentation(const ToricMatrix& a, PresentationOptions options = {});

/// Closed form for A_n and its combinatorial companions.
struct AnData {
  unsigned n = 0;
  Presentation presentation;
  std::vector<ExponentVector> D;  ///< r in {0..n-1}^n with n | |r|
  std::vector<ExponentVector> J;  ///< {r + e_{n+1} : r in {0..n}^n, |r| = n} minus (1,...,1)
  std::uint64_t t = 0;            ///< #{r in {0..n-1}^n : |r| = n}
  Integer d;                      ///< C(2n-1, n) - n - 1
  RationalVector alpha_star;      ///< (1/n, ..., 1/n, 0)
  RationalVector beta;            ///< (1, ..., 1, 1 + 1/t)
  /// Decomposition of beta over J and e_{n+1}.
  std::map<ExponentVector, Rational> beta_coefficients;
};

AnData presentation_An(unsigned n);

/// Compares the expansion of p with the enumeration of T(A; b) to weight n.
/// restricted selects T(A) (some coordinate zero) instead of T(A; b).
bool verify_presentation(const Presentation& p, const ToricMatrix& a, const std::vector<long>& b,
                         bool restricted, std::uint64_t n);

/// C(A) = #{eps in {+-1}^n : prod eps_i^{a_ji} = 1 for all j} / 2.
Integer toric_constant(const ToricMatrix& a);

struct VertexRecord {
  RationalVector alpha;
  std::set<ExponentVector> contact;
  std::vector<std::size_t> zeros;
  long degree = 0;
  bool minimal = false;  ///< on R(I)
  bool cprime_ok = true;
};

struct AnalyticData {
  PointSet I;
  DualPolyhedron dual;
  std::map<ExponentVector, Integer> cprime;
  Integer CA;
  std::vector<VertexRecord> vertices;
  bool cprime_ok = true;
  std::vector<std::string> violations;
};

struct AnalyticOptions {
  unsigned threads = 1;
  bool throw_on_violation = true;
};

/// Throws CprimeViolation when some contact point at some vertex has c' != 1
/// (unless disabled in options).
AnalyticData analytic_data(const Presentation& p, const ToricMatrix& a, AnalyticOptions options = {});

struct HValue {
  Real value;
  Real log_value;
  Real min_factor;
  Real log_tail_bound;  ///< crude estimate of |log of the omitted tail|
  Rational u;           ///< decay exponent used for the tail estimate
  std::uint64_t primes = 0;
  std::size_t contact_count = 0;  ///< #K(I, alpha)
};

/// Truncated Euler product for H_alpha(0) over primes p <= prime_cutoff.
/// Throws NotInDual or NonPositiveFactor.
HValue H_alpha_value(const Presentation& p, const RationalVector& alpha, std::uint64_t prime_cutoff);

/// p^(-q) in Real arithmetic.
Real prime_power(std::uint64_t p, const Rational& q);

}  // namespace mvz

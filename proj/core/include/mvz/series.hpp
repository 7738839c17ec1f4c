#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mvz/exponent.hpp"
#include "mvz/numeric.hpp"

namespace mvz {

/// Integer-coefficient multivariate series with an optional weight cutoff.
/// Without a cutoff the value is an exact polynomial; with one, coefficients
/// of weight above the cutoff are unknown. Zero coefficients are never stored.
class SparseSeries {
 public:
  using TermMap = std::map<ExponentVector, Integer>;

  explicit SparseSeries(std::size_t nvars = 0, std::optional<std::uint64_t> cutoff = std::nullopt);

  static SparseSeries one(std::size_t nvars);
  static SparseSeries monomial(const ExponentVector& e, const Integer& c = 1);
  /// Duplicate exponents are summed; terms above the cutoff are dropped.
  static SparseSeries from_terms(std::size_t nvars,
                                 const std::vector<std::pair<ExponentVector, Integer>>& terms,
                                 std::optional<std::uint64_t> cutoff = std::nullopt);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::optional<std::uint64_t>& cutoff() const noexcept { return cutoff_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Throws CutoffExceeded if the weight of e is above the cutoff.
  Integer coeff(const ExponentVector& e) const;
  Integer constant_term() const;
  /// Largest weight of a stored term (0 for the zero series).
  std::uint64_t degree() const;
  /// Smallest weight of a stored term; nullopt for the zero series.
  std::optional<std::uint64_t> order() const;
  /// Degree in a single variable.
  std::uint64_t degree_in(std::size_t var) const;

  void add_term(const ExponentVector& e, const Integer& c);
  /// Drops any zero coefficients; a no-op for series built through this API.
  void normalize();

  SparseSeries truncated(std::uint64_t n) const;
  SparseSeries with_cutoff(std::optional<std::uint64_t> cutoff) const;
  SparseSeries shifted(const ExponentVector& e) const;
  SparseSeries operator-() const;
  SparseSeries operator+(const SparseSeries& other) const;
  SparseSeries operator-(const SparseSeries& other) const;
  SparseSeries operator*(const Integer& k) const;
  /// Exact product of two polynomials (both without cutoff).
  SparseSeries operator*(const SparseSeries& other) const;

  /// Same nvars, same terms and same cutoff.
  bool operator==(const SparseSeries& other) const = default;

  std::string to_string() const;

 private:
  void require_same_dimension(const SparseSeries& other) const;

  std::size_t nvars_;
  std::optional<std::uint64_t> cutoff_;
  TermMap terms_;
};

/// Product truncated at weight n; the cutoff is the tightest one implied by
/// n and the operands' cutoffs.
SparseSeries mul(const SparseSeries& a, const SparseSeries& b, std::uint64_t n);

/// S(h), or S*(h) = S(h) without 0 when strict.
std::set<ExponentVector> support(const SparseSeries& h, bool strict);

/// Coefficients of log h up to weight n. Requires constant term 1.
std::map<ExponentVector, Rational> log_series(const SparseSeries& h, std::uint64_t n);

/// Polynomial division by (1 - X^nu), or nullopt if it does not divide.
std::optional<SparseSeries> divide_by_binomial(const SparseSeries& w, const ExponentVector& nu);

/// Multiplies by (1 - X^nu).
SparseSeries times_binomial(const SparseSeries& w, const ExponentVector& nu);

}  // namespace mvz

#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "mvz/exponent.hpp"
#include "mvz/series.hpp"

namespace mvz {

/// All monomials of weight <= max_weight in graded-lex order, with O(1)
/// index lookup. Backs the dense truncated kernels below.
class MonomialTable {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  MonomialTable(std::size_t nvars, std::uint32_t max_weight);

  std::size_t nvars() const noexcept { return nvars_; }
  std::uint32_t max_weight() const noexcept { return max_weight_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  const ExponentVector& operator[](std::size_t i) const { return monomials_[i]; }
  std::uint32_t weight(std::size_t i) const { return weights_[i]; }

  std::size_t index_of(const ExponentVector& v) const;
  /// Index of monomial(i) - m, or npos when m does not divide it.
  std::size_t index_minus(std::size_t i, const ExponentVector& m) const;

 private:
  std::uint64_t code(const ExponentVector& v) const;
  std::size_t lookup(std::uint64_t code) const;

  std::size_t nvars_;
  std::uint32_t max_weight_;
  std::vector<ExponentVector> monomials_;
  std::vector<std::uint32_t> weights_;
  std::vector<std::uint64_t> codes_;
  std::vector<std::uint32_t> dense_lookup_;
  std::unordered_map<std::uint64_t, std::uint32_t> sparse_lookup_;
};

namespace dense {

using Coeffs = std::vector<Integer>;

Coeffs from_sparse(const SparseSeries& s, const MonomialTable& table);
SparseSeries to_sparse(const Coeffs& c, const MonomialTable& table);

/// c <- c * (1 - X^m)^e, truncated at the table weight; e may be negative.
void multiply_binomial_power(Coeffs& c, const MonomialTable& table, const ExponentVector& m,
                             const Integer& e);
/// Coefficients of 1/h; requires constant term 1.
Coeffs inverse(const SparseSeries& h, const MonomialTable& table);
/// a * b with a sparse.
Coeffs multiply(const SparseSeries& a, const Coeffs& b, const MonomialTable& table);
/// a / b with b(0) = 1.
Coeffs divide(const Coeffs& a, const Coeffs& b, const MonomialTable& table);

}  // namespace dense

}  // namespace mvz

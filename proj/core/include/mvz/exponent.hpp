#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "mvz/numeric.hpp"

namespace mvz {

/// Nonnegative exponent vector. The natural order is graded-lex: total weight
/// first, then lexicographic on the entries (so X_2 < X_1 at weight one).
class ExponentVector {
 public:
  using value_type = std::uint32_t;

  ExponentVector() = default;
  explicit ExponentVector(std::size_t nvars) : e_(nvars, 0) {}
  ExponentVector(std::initializer_list<value_type> entries) : e_(entries) {}
  explicit ExponentVector(std::vector<value_type> entries) : e_(std::move(entries)) {}

  static ExponentVector unit(std::size_t nvars, std::size_t i);
  /// Throws InvalidInput on negative entries.
  static ExponentVector from_signed(const std::vector<long>& entries);

  std::size_t size() const noexcept { return e_.size(); }
  value_type operator[](std::size_t i) const { return e_[i]; }
  value_type& operator[](std::size_t i) { return e_[i]; }
  const std::vector<value_type>& entries() const noexcept { return e_; }

  std::uint64_t weight() const noexcept;
  bool is_zero() const noexcept;
  /// Componentwise <=.
  bool divides(const ExponentVector& other) const noexcept;
  /// gcd of the entries is 1.
  bool is_primitive() const;

  ExponentVector operator+(const ExponentVector& other) const;
  ExponentVector scaled(value_type k) const;
  /// this - other when other divides this.
  std::optional<ExponentVector> minus(const ExponentVector& other) const;

  Rational dot(const RationalVector& x) const;
  std::vector<long> as_signed() const;
  std::string to_string() const;

  bool operator==(const ExponentVector& other) const = default;
  std::strong_ordering operator<=>(const ExponentVector& other) const;

 private:
  std::vector<value_type> e_;
};

struct ExponentHash {
  std::size_t operator()(const ExponentVector& v) const noexcept;
};

}  // namespace mvz

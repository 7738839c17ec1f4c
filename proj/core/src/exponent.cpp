#include "mvz/exponent.hpp"

#include <numeric>

#include "mvz/errors.hpp"

namespace mvz {

ExponentVector ExponentVector::unit(std::size_t nvars, std::size_t i) {
  ExponentVector v(nvars);
  v.e_.at(i) = 1;
  return v;
}

ExponentVector ExponentVector::from_signed(const std::vector<long>& entries) {
  ExponentVector v(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] < 0 || entries[i] > static_cast<long>(UINT32_MAX)) {
      throw InvalidInput("exponent entry out of range: " + std::to_string(entries[i]));
    }
    v.e_[i] = static_cast<value_type>(entries[i]);
  }
  return v;
}

std::uint64_t ExponentVector::weight() const noexcept {
  std::uint64_t w = 0;
  for (auto x : e_) w += x;
  return w;
}

bool ExponentVector::is_zero() const noexcept {
  for (auto x : e_) {
    if (x != 0) return false;
  }
  return true;
}

bool ExponentVector::divides(const ExponentVector& other) const noexcept {
  if (other.size() != size()) return false;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

bool ExponentVector::is_primitive() const {
  value_type g = 0;
  for (auto x : e_) g = std::gcd(g, x);
  return g == 1;
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
  if (other.size() != size()) throw DimensionMismatch("exponent dimensions differ");
  ExponentVector r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += other.e_[i];
  return r;
}

ExponentVector ExponentVector::scaled(value_type k) const {
  ExponentVector r(*this);
  for (auto& x : r.e_) x *= k;
  return r;
}

std::optional<ExponentVector> ExponentVector::minus(const ExponentVector& other) const {
  if (!other.divides(*this)) return std::nullopt;
  ExponentVector r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= other.e_[i];
  return r;
}

Rational ExponentVector::dot(const RationalVector& x) const {
  Rational s = 0;
  for (std::size_t i = 0; i < e_.size() && i < x.size(); ++i) {
    if (e_[i] != 0) s += x[i] * static_cast<unsigned long>(e_[i]);
  }
  return s;
}

std::vector<long> ExponentVector::as_signed() const { return {e_.begin(), e_.end()}; }

std::string ExponentVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e_[i]);
  }
  return s + ")";
}

std::strong_ordering ExponentVector::operator<=>(const ExponentVector& other) const {
  if (auto c = weight() <=> other.weight(); c != 0) return c;
  return e_ <=> other.e_;
}

std::size_t ExponentHash::operator()(const ExponentVector& v) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : v.entries()) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace mvz

#include "mvz/dense.hpp"

#include <limits>

#include "mvz/errors.hpp"

namespace mvz {

namespace {

constexpr std::uint64_t kDenseLookupLimit = std::uint64_t{1} << 22;

void compositions(std::size_t nvars, std::uint32_t w, std::vector<std::uint32_t>& cur, std::size_t pos,
                  std::vector<ExponentVector>& out) {
  if (pos + 1 == nvars) {
    cur[pos] = w;
    out.emplace_back(cur);
    return;
  }
  for (std::uint32_t x = 0; x <= w; ++x) {
    cur[pos] = x;
    compositions(nvars, w - x, cur, pos + 1, out);
  }
}

}  // namespace

MonomialTable::MonomialTable(std::size_t nvars, std::uint32_t max_weight)
    : nvars_(nvars), max_weight_(max_weight) {
  std::uint64_t base = std::uint64_t{max_weight} + 1;
  std::uint64_t span = 1;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (span > std::numeric_limits<std::uint64_t>::max() / base) {
      throw BudgetExceeded("monomial table too large: " + std::to_string(nvars) + " variables to weight " +
                           std::to_string(max_weight));
    }
    span *= base;
  }
  if (nvars == 0) {
    monomials_.emplace_back();
  } else {
    std::vector<std::uint32_t> cur(nvars, 0);
    for (std::uint32_t w = 0; w <= max_weight; ++w) compositions(nvars, w, cur, 0, monomials_);
  }
  if (monomials_.size() >= std::numeric_limits<std::uint32_t>::max()) {
    throw BudgetExceeded("monomial table too large");
  }
  weights_.reserve(monomials_.size());
  codes_.reserve(monomials_.size());
  for (const auto& m : monomials_) {
    weights_.push_back(static_cast<std::uint32_t>(m.weight()));
    codes_.push_back(code(m));
  }
  if (span <= kDenseLookupLimit) {
    dense_lookup_.assign(span, std::numeric_limits<std::uint32_t>::max());
    for (std::size_t i = 0; i < codes_.size(); ++i) dense_lookup_[codes_[i]] = static_cast<std::uint32_t>(i);
  } else {
    sparse_lookup_.reserve(codes_.size());
    for (std::size_t i = 0; i < codes_.size(); ++i) sparse_lookup_.emplace(codes_[i], static_cast<std::uint32_t>(i));
  }
}

std::uint64_t MonomialTable::code(const ExponentVector& v) const {
  std::uint64_t base = std::uint64_t{max_weight_} + 1;
  std::uint64_t c = 0, scale = 1;
  for (std::size_t i = 0; i < nvars_; ++i) {
    c += std::uint64_t{v[i]} * scale;
    scale *= base;
  }
  return c;
}

std::size_t MonomialTable::lookup(std::uint64_t c) const {
  if (!dense_lookup_.empty()) {
    auto idx = dense_lookup_[c];
    return idx == std::numeric_limits<std::uint32_t>::max() ? npos : idx;
  }
  auto it = sparse_lookup_.find(c);
  return it == sparse_lookup_.end() ? npos : it->second;
}

std::size_t MonomialTable::index_of(const ExponentVector& v) const {
  if (v.size() != nvars_ || v.weight() > max_weight_) return npos;
  return lookup(code(v));
}

std::size_t MonomialTable::index_minus(std::size_t i, const ExponentVector& m) const {
  const auto& v = monomials_[i];
  for (std::size_t j = 0; j < nvars_; ++j) {
    if (m[j] > v[j]) return npos;
  }
  return lookup(codes_[i] - code(m));
}

namespace dense {

Coeffs from_sparse(const SparseSeries& s, const MonomialTable& table) {
  if (s.nvars() != table.nvars()) throw DimensionMismatch("series and table dimensions differ");
  Coeffs c(table.size());
  for (const auto& [e, v] : s.terms()) {
    auto i = table.index_of(e);
    if (i != MonomialTable::npos) c[i] = v;
  }
  return c;
}

SparseSeries to_sparse(const Coeffs& c, const MonomialTable& table) {
  SparseSeries s(table.nvars(), table.max_weight());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) s.add_term(table[i], c[i]);
  }
  return s;
}

void multiply_binomial_power(Coeffs& c, const MonomialTable& table, const ExponentVector& m,
                             const Integer& e) {
  if (e == 0) return;
  if (m.is_zero()) throw InvalidInput("binomial power with zero exponent vector");
  std::uint64_t w = m.weight();
  if (w > table.max_weight()) return;
  if (e == -1) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      auto j = table.index_minus(i, m);
      if (j != MonomialTable::npos) c[i] += c[j];
    }
    return;
  }
  if (e == 1) {
    for (std::size_t i = c.size(); i-- > 0;) {
      auto j = table.index_minus(i, m);
      if (j != MonomialTable::npos) c[i] -= c[j];
    }
    return;
  }
  std::uint64_t kmax = table.max_weight() / w;
  std::vector<Integer> s(kmax + 1);
  s[0] = 1;
  for (std::uint64_t k = 1; k <= kmax; ++k) {
    if (e > 0) {
      // (1 - t)^e
      s[k] = s[k - 1] * (Integer(e) - static_cast<unsigned long>(k - 1));
      s[k] = -s[k] / static_cast<unsigned long>(k);
    } else {
      // (1 - t)^-|e| = sum C(|e|+k-1, k) t^k
      s[k] = s[k - 1] * (Integer(-e) + static_cast<unsigned long>(k - 1)) / static_cast<unsigned long>(k);
    }
  }
  Integer acc;
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = c[i];
    std::size_t j = i;
    for (std::uint64_t k = 1; k <= kmax; ++k) {
      j = table.index_minus(j, m);
      if (j == MonomialTable::npos) break;
      if (s[k] != 0 && c[j] != 0) acc += s[k] * c[j];
    }
    c[i] = acc;
  }
}

namespace {

std::vector<std::pair<ExponentVector, Integer>> nonconstant_terms(const SparseSeries& h) {
  std::vector<std::pair<ExponentVector, Integer>> t;
  for (const auto& [e, v] : h.terms()) {
    if (!e.is_zero()) t.emplace_back(e, v);
  }
  return t;
}

}  // namespace

Coeffs inverse(const SparseSeries& h, const MonomialTable& table) {
  if (h.nvars() != table.nvars()) throw DimensionMismatch("series and table dimensions differ");
  if (h.constant_term() != 1) throw ConstantTermNotOne();
  auto terms = nonconstant_terms(h);
  Coeffs g(table.size());
  g[0] = 1;
  Integer acc;
  for (std::size_t i = 1; i < table.size(); ++i) {
    acc = 0;
    for (const auto& [t, v] : terms) {
      if (t.weight() > table.weight(i)) break;
      auto j = table.index_minus(i, t);
      if (j != MonomialTable::npos && g[j] != 0) acc -= v * g[j];
    }
    g[i] = acc;
  }
  return g;
}

Coeffs multiply(const SparseSeries& a, const Coeffs& b, const MonomialTable& table) {
  if (a.nvars() != table.nvars()) throw DimensionMismatch("series and table dimensions differ");
  Coeffs out(table.size());
  Integer acc;
  for (std::size_t i = 0; i < table.size(); ++i) {
    acc = 0;
    for (const auto& [t, v] : a.terms()) {
      if (t.weight() > table.weight(i)) break;
      auto j = table.index_minus(i, t);
      if (j != MonomialTable::npos && b[j] != 0) acc += v * b[j];
    }
    out[i] = acc;
  }
  return out;
}

Coeffs divide(const Coeffs& a, const Coeffs& b, const MonomialTable& table) {
  if (b.empty() || b[0] != 1) throw ConstantTermNotOne();
  auto terms = nonconstant_terms(to_sparse(b, table));
  Coeffs q(table.size());
  Integer acc;
  for (std::size_t i = 0; i < table.size(); ++i) {
    acc = a[i];
    for (const auto& [t, v] : terms) {
      if (t.weight() > table.weight(i)) break;
      auto j = table.index_minus(i, t);
      if (j != MonomialTable::npos && q[j] != 0) acc -= v * q[j];
    }
    q[i] = acc;
  }
  return q;
}

}  // namespace dense

}  // namespace mvz

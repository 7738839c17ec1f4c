#include "mvz/series.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "mvz/dense.hpp"
#include "mvz/errors.hpp"

namespace mvz {

SparseSeries::SparseSeries(std::size_t nvars, std::optional<std::uint64_t> cutoff)
    : nvars_(nvars), cutoff_(cutoff) {}

SparseSeries SparseSeries::one(std::size_t nvars) {
  SparseSeries s(nvars);
  s.add_term(ExponentVector(nvars), 1);
  return s;
}

SparseSeries SparseSeries::monomial(const ExponentVector& e, const Integer& c) {
  SparseSeries s(e.size());
  s.add_term(e, c);
  return s;
}

SparseSeries SparseSeries::from_terms(std::size_t nvars,
                                      const std::vector<std::pair<ExponentVector, Integer>>& terms,
                                      std::optional<std::uint64_t> cutoff) {
  SparseSeries s(nvars, cutoff);
  for (const auto& [e, c] : terms) {
    if (e.size() != nvars) throw DimensionMismatch("term " + e.to_string() + " has wrong dimension");
    if (cutoff && e.weight() > *cutoff) continue;
    s.add_term(e, c);
  }
  return s;
}

Integer SparseSeries::coeff(const ExponentVector& e) const {
  if (e.size() != nvars_) throw DimensionMismatch("coefficient query has wrong dimension");
  if (cutoff_ && e.weight() > *cutoff_) {
    throw CutoffExceeded("coefficient of weight " + std::to_string(e.weight()) +
                         " requested from a series known to weight " + std::to_string(*cutoff_));
  }
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer SparseSeries::constant_term() const { return coeff(ExponentVector(nvars_)); }

std::uint64_t SparseSeries::degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.weight();
}

std::optional<std::uint64_t> SparseSeries::order() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.weight();
}

std::uint64_t SparseSeries::degree_in(std::size_t var) const {
  std::uint64_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max<std::uint64_t>(d, e[var]);
  return d;
}

void SparseSeries::add_term(const ExponentVector& e, const Integer& c) {
  if (e.size() != nvars_) throw DimensionMismatch("term " + e.to_string() + " has wrong dimension");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void SparseSeries::normalize() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

SparseSeries SparseSeries::truncated(std::uint64_t n) const {
  SparseSeries r(nvars_, cutoff_ ? std::min(*cutoff_, n) : n);
  for (const auto& [e, c] : terms_) {
    if (e.weight() <= n) r.terms_.emplace_hint(r.terms_.end(), e, c);
  }
  return r;
}

SparseSeries SparseSeries::with_cutoff(std::optional<std::uint64_t> cutoff) const {
  SparseSeries r(*this);
  r.cutoff_ = cutoff;
  if (cutoff) std::erase_if(r.terms_, [&](const auto& kv) { return kv.first.weight() > *cutoff; });
  return r;
}

SparseSeries SparseSeries::shifted(const ExponentVector& e) const {
  if (e.size() != nvars_) throw DimensionMismatch("shift has wrong dimension");
  SparseSeries r(nvars_, cutoff_ ? std::optional(*cutoff_ + e.weight()) : std::nullopt);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m + e, c);
  return r;
}

SparseSeries SparseSeries::operator-() const {
  SparseSeries r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

namespace {

std::optional<std::uint64_t> min_cutoff(const std::optional<std::uint64_t>& a,
                                        const std::optional<std::uint64_t>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

}  // namespace

SparseSeries SparseSeries::operator+(const SparseSeries& other) const {
  require_same_dimension(other);
  SparseSeries r = with_cutoff(min_cutoff(cutoff_, other.cutoff_));
  for (const auto& [e, c] : other.terms_) {
    if (!r.cutoff_ || e.weight() <= *r.cutoff_) r.add_term(e, c);
  }
  return r;
}

SparseSeries SparseSeries::operator-(const SparseSeries& other) const { return *this + (-other); }

SparseSeries SparseSeries::operator*(const Integer& k) const {
  SparseSeries r(nvars_, cutoff_);
  if (k == 0) return r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, c * k);
  return r;
}

SparseSeries SparseSeries::operator*(const SparseSeries& other) const {
  require_same_dimension(other);
  if (cutoff_ || other.cutoff_) {
    throw InvalidInput("exact product requires polynomials; use mul() with a weight bound");
  }
  SparseSeries r(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) r.add_term(ea + eb, ca * cb);
  }
  return r;
}

std::string SparseSeries::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << c.get_str() << "*X^" << e.to_string();
  }
  if (first) out << "0";
  if (cutoff_) out << " + O(w>" << *cutoff_ << ")";
  return out.str();
}

void SparseSeries::require_same_dimension(const SparseSeries& other) const {
  if (other.nvars_ != nvars_) {
    throw DimensionMismatch("series dimensions differ: " + std::to_string(nvars_) + " vs " +
                            std::to_string(other.nvars_));
  }
}

SparseSeries mul(const SparseSeries& a, const SparseSeries& b, std::uint64_t n) {
  if (a.nvars() != b.nvars()) throw DimensionMismatch("mul: series dimensions differ");
  std::uint64_t cutoff = n;
  auto ord_a = a.order(), ord_b = b.order();
  if (a.cutoff() && ord_b) cutoff = std::min(cutoff, *a.cutoff() + *ord_b);
  if (b.cutoff() && ord_a) cutoff = std::min(cutoff, *b.cutoff() + *ord_a);
  SparseSeries r(a.nvars(), cutoff);
  for (const auto& [ea, ca] : a.terms()) {
    if (ea.weight() > cutoff) break;
    for (const auto& [eb, cb] : b.terms()) {
      if (ea.weight() + eb.weight() > cutoff) break;
      r.add_term(ea + eb, ca * cb);
    }
  }
  return r;
}

std::set<ExponentVector> support(const SparseSeries& h, bool strict) {
  std::set<ExponentVector> s;
  for (const auto& [e, c] : h.terms()) {
    if (strict && e.is_zero()) continue;
    s.insert(e);
  }
  return s;
}

std::map<ExponentVector, Rational> log_series(const SparseSeries& h, std::uint64_t n) {
  if (h.cutoff() && *h.cutoff() < n) {
    throw CutoffExceeded("log_series to weight " + std::to_string(n) + " of a series known to weight " +
                         std::to_string(*h.cutoff()));
  }
  if (h.constant_term() != 1) throw ConstantTermNotOne();
  MonomialTable table(h.nvars(), static_cast<std::uint32_t>(n));
  SparseSeries dh(h.nvars());
  for (const auto& [e, c] : h.terms()) dh.add_term(e, c * static_cast<unsigned long>(e.weight()));
  dense::Coeffs b = dense::multiply(dh, dense::inverse(h, table), table);
  std::map<ExponentVector, Rational> out;
  for (std::size_t i = 1; i < table.size(); ++i) {
    if (b[i] == 0) continue;
    Rational q(b[i], Integer(table.weight(i)));
    q.canonicalize();
    out.emplace(table[i], q);
  }
  return out;
}

std::optional<SparseSeries> divide_by_binomial(const SparseSeries& w, const ExponentVector& nu) {
  if (nu.size() != w.nvars()) throw DimensionMismatch("divide_by_binomial: dimension mismatch");
  if (nu.is_zero()) throw InvalidInput("divide_by_binomial: nu must be nonzero");
  if (w.cutoff()) throw InvalidInput("divide_by_binomial: polynomial required");
  // Terms are grouped into chains base + k*nu; a chain is divisible iff its
  // coefficients sum to zero, and the quotient has the partial sums.
  std::map<ExponentVector, std::map<std::uint32_t, Integer>> chains;
  for (const auto& [mu, c] : w.terms()) {
    std::uint32_t k = std::numeric_limits<std::uint32_t>::max();
    for (std::size_t i = 0; i < nu.size(); ++i) {
      if (nu[i] > 0) k = std::min(k, mu[i] / nu[i]);
    }
    ExponentVector base = *mu.minus(nu.scaled(k));
    chains[base][k] = c;
  }
  SparseSeries q(w.nvars());
  for (const auto& [base, chain] : chains) {
    Integer total = 0;
    for (const auto& [k, c] : chain) total += c;
    if (total != 0) return std::nullopt;
    Integer running = 0;
    std::uint32_t top = chain.rbegin()->first;
    auto it = chain.begin();
    for (std::uint32_t k = 0; k < top; ++k) {
      if (it != chain.end() && it->first == k) {
        running += it->second;
        ++it;
      }
      if (running != 0) q.add_term(base + nu.scaled(k), running);
    }
  }
  return q;
}

SparseSeries times_binomial(const SparseSeries& w, const ExponentVector& nu) {
  return w - w.shifted(nu);
}

}  // namespace mvz

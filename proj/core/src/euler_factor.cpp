#include "mvz/euler_factor.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "mvz/dense.hpp"
#include "mvz/errors.hpp"
#include "mvz/polyhedra.hpp"

namespace mvz {

Integer CyclotomicFactorization::exponent(const ExponentVector& m) const {
  auto it = exponents.find(m);
  return it == exponents.end() ? Integer(0) : it->second;
}

CyclotomicFactorization factorize(const SparseSeries& h, std::uint64_t n, FactorizeOptions options) {
  if (h.cutoff() && *h.cutoff() < n) {
    throw CutoffExceeded("factorize to weight " + std::to_string(n) + " of a series known to weight " +
                         std::to_string(*h.cutoff()));
  }
  if (options.prime_var && *options.prime_var >= h.nvars()) {
    throw InvalidInput("prime variable index out of range");
  }
  if (h.constant_term() != 1) throw ConstantTermNotOne();

  // b = [X^M] (Dh)/h with D the weight operator; then
  // |M| e(M) = -b(M) - sum_{j >= 2, j | M} |M/j| e(M/j).
  MonomialTable table(h.nvars(), static_cast<std::uint32_t>(n));
  SparseSeries dh(h.nvars());
  for (const auto& [m, c] : h.terms()) dh.add_term(m, c * static_cast<unsigned long>(m.weight()));
  dense::Coeffs b = dense::multiply(dh, dense::inverse(h, table), table);

  CyclotomicFactorization f;
  f.nvars = h.nvars();
  f.prime_var = options.prime_var;
  f.cutoff = n;
  dense::Coeffs e(table.size());
  for (std::size_t i = 1; i < table.size(); ++i) {
    const ExponentVector& m = table[i];
    const unsigned long w = table.weight(i);
    Integer acc = -b[i];
    std::uint32_t g = 0;
    for (auto x : m.entries()) g = std::gcd(g, x);
    for (std::uint32_t j = 2; j <= g; ++j) {
      if (g % j != 0) continue;
      ExponentVector root(m);
      for (std::size_t k = 0; k < root.size(); ++k) root[k] /= j;
      const Integer& er = e[table.index_of(root)];
      if (er != 0) acc -= er * (w / j);
    }
    if (!mpz_divisible_ui_p(acc.get_mpz_t(), w)) {
      throw NonIntegralExponent("e" + m.to_string() + " is not an integer");
    }
    mpz_divexact_ui(e[i].get_mpz_t(), acc.get_mpz_t(), w);
    if (e[i] != 0) f.exponents.emplace(m, e[i]);
  }

  if (options.compute_residual) {
    dense::Coeffs rec(table.size());
    rec[0] = 1;
    for (const auto& [m, v] : f.exponents) dense::multiply_binomial_power(rec, table, m, v);
    dense::Coeffs g = dense::divide(dense::from_sparse(h, table), rec, table);
    f.residual = dense::to_sparse(g, table);
    if (f.residual->terms() != SparseSeries::one(h.nvars()).terms()) {
      throw InternalError("factorize: residual series is not 1");
    }
  }
  return f;
}

SparseSeries reconstruct(const CyclotomicFactorization& f, std::uint64_t n) {
  if (n > f.cutoff) {
    throw CutoffExceeded("reconstruct to weight " + std::to_string(n) + " exceeds factorization cutoff " +
                         std::to_string(f.cutoff));
  }
  MonomialTable table(f.nvars, static_cast<std::uint32_t>(n));
  dense::Coeffs c(table.size());
  c[0] = 1;
  for (const auto& [m, e] : f.exponents) {
    if (m.weight() <= n) dense::multiply_binomial_power(c, table, m, e);
  }
  return dense::to_sparse(c, table);
}

namespace {

SparseSeries binomial_product(std::size_t nvars, const std::map<ExponentVector, Integer>& exps, int sign) {
  SparseSeries p = SparseSeries::one(nvars);
  for (const auto& [m, e] : exps) {
    if (sgn(e) != sign) continue;
    SparseSeries factor = SparseSeries::one(nvars) - SparseSeries::monomial(m);
    for (Integer k = 0; k < abs(e); ++k) p = p * factor;
  }
  return p;
}

}  // namespace

CyclotomicVerdict cyclotomic_test(const SparseSeries& h, std::optional<std::uint64_t> bound) {
  if (h.cutoff()) throw InvalidInput("cyclotomic_test requires a polynomial");
  const std::uint64_t deg = h.degree();
  CyclotomicVerdict v;
  v.bound = bound.value_or(4 * deg);
  auto f = factorize(h, v.bound, {.prime_var = std::nullopt, .compute_residual = false});
  v.exponents = f.exponents;

  Integer pos = 0, neg = 0;
  for (const auto& [m, e] : f.exponents) {
    Integer d = e * static_cast<unsigned long>(m.weight());
    (e > 0 ? pos : neg) += abs(d);
  }
  // Only attempt the identity when degrees can match; the guard keeps the
  // exact products small.
  if (pos == neg + deg && pos <= 8 * std::max<std::uint64_t>(v.bound, 1)) {
    SparseSeries lhs = h * binomial_product(h.nvars(), f.exponents, -1);
    SparseSeries rhs = binomial_product(h.nvars(), f.exponents, +1);
    if (lhs == rhs) {
      v.cyclotomic = true;
      return v;
    }
  }
  if (!f.exponents.empty()) v.witness = f.exponents.rbegin()->first;
  return v;
}

std::vector<ZetaFactor> zeta_translation(const CyclotomicFactorization& f) {
  std::vector<ZetaFactor> out;
  for (const auto& [m, e] : f.exponents) {
    ZetaFactor z;
    std::vector<std::uint32_t> form;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (f.prime_var && i == *f.prime_var) {
        z.shift = m[i];
      } else {
        form.push_back(m[i]);
      }
    }
    z.form = ExponentVector(std::move(form));
    z.gamma = -e;
    out.push_back(std::move(z));
  }
  std::sort(out.begin(), out.end(), [](const ZetaFactor& a, const ZetaFactor& b) {
    return std::tie(a.shift, a.form) < std::tie(b.shift, b.form);
  });
  return out;
}

BoundaryDescriptor boundary(const SparseSeries& h, std::optional<std::size_t> prime_var, BoundaryVariant variant) {
  if (prime_var && *prime_var >= h.nvars()) throw InvalidInput("prime variable index out of range");
  const std::size_t q = h.nvars() - (prime_var ? 1 : 0);
  std::map<std::uint64_t, std::vector<ExponentVector>> levels;
  std::set<std::uint64_t> pure_levels;
  for (const auto& [m, c] : h.terms()) {
    std::uint64_t k = prime_var ? m[*prime_var] : 0;
    std::vector<std::uint32_t> rest;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!prime_var || i != *prime_var) rest.push_back(m[i]);
    }
    ExponentVector nu(std::move(rest));
    if (nu.is_zero()) {
      if (k > 0) pure_levels.insert(k);
      continue;
    }
    levels[k].push_back(std::move(nu));
  }
  BoundaryDescriptor d;
  d.variant = variant;
  for (auto& [k, points] : levels) {
    for (const auto& nu : extremal_points(PointSet::from(q, points))) d.halfspaces.push_back({nu, k});
  }
  // A term X_p^k alone gives the unsatisfiable constraint 0 > k + delta.
  for (auto k : pure_levels) d.halfspaces.push_back({ExponentVector(q), k});
  std::stable_sort(d.halfspaces.begin(), d.halfspaces.end(),
                   [](const Halfspace& a, const Halfspace& b) { return std::tie(a.k, a.nu) < std::tie(b.k, b.nu); });
  if (variant == BoundaryVariant::V) {
    for (std::size_t i = 0; i < q; ++i) d.halfspaces.push_back({ExponentVector::unit(q, i), 0});
    d.positivity = q;
  }
  if (prime_var && h.nvars() == 2 && h.size() > 0 && !(h - SparseSeries::one(2)).is_zero()) {
    d.beta = boundary_abscissas(h, *prime_var);
  }
  return d;
}

namespace {

void raise(Abscissa& a, const Rational& v) {
  if (!a.infinite && v > a.value) a.value = v;
}

}  // namespace

BetaPair boundary_abscissas(const SparseSeries& h, std::size_t prime_var) {
  if (h.nvars() != 2) throw DimensionMismatch("boundary abscissas need a bivariate series");
  if (prime_var > 1) throw InvalidInput("prime variable index out of range");
  if (h.cutoff()) throw InvalidInput("boundary abscissas need a polynomial");
  const std::size_t y = 1 - prime_var;
  SparseSeries big_h = h - SparseSeries::one(2);
  if (big_h.is_zero()) throw ZeroH();

  // beta0: group by Y-degree j, take the X_p-degree n(j) of each H_j.
  std::map<std::uint32_t, std::uint32_t> n_of_j;
  for (const auto& [m, c] : big_h.terms()) {
    auto& slot = n_of_j[m[y]];
    slot = std::max(slot, m[prime_var]);
  }
  // beta1: group by X_p-degree k, take the Y-order m(k) of each h_k.
  std::map<std::uint32_t, std::uint32_t> m_of_k;
  for (const auto& [m, c] : big_h.terms()) {
    auto [it, fresh] = m_of_k.try_emplace(m[prime_var], m[y]);
    if (!fresh) it->second = std::min(it->second, m[y]);
  }

  BetaPair r;
  r.beta0.value = 0;
  r.beta1.value = 0;
  for (auto [j, nj] : n_of_j) {
    if (j == 0) {
      if (nj > 0) r.beta0.infinite = true;
      continue;
    }
    raise(r.beta0, Rational(nj, j));
  }
  for (auto [k, mk] : m_of_k) {
    if (mk == 0) {
      if (k > 0) r.beta1.infinite = true;
      continue;
    }
    raise(r.beta1, Rational(k, mk));
  }
  if (r.beta0.infinite) r.beta0.value = 0;
  if (r.beta1.infinite) r.beta1.value = 0;
  r.beta0.value.canonicalize();
  r.beta1.value.canonicalize();
  return r;
}

const char* to_string(BoundaryVariant v) { return v == BoundaryVariant::V ? "V" : "Vsharp"; }

}  // namespace mvz

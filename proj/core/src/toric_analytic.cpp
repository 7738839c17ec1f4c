#include <algorithm>

#include "mvz/errors.hpp"
#include "mvz/toric.hpp"

namespace mvz {

namespace {

/// All r in {0..top}^n, in graded-lex order.
std::vector<ExponentVector> cube(unsigned n, unsigned top) {
  std::vector<ExponentVector> out;
  ExponentVector r(n);
  for (;;) {
    out.push_back(r);
    std::size_t i = 0;
    while (i < n && r[i] == top) r[i++] = 0;
    if (i == n) break;
    ++r[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

ExponentVector append(const ExponentVector& r, std::uint32_t last) {
  std::vector<std::uint32_t> e = r.entries();
  e.push_back(last);
  return ExponentVector(std::move(e));
}

}  // namespace

AnData presentation_An(unsigned n) {
  if (n < 2) throw InvalidInput("presentation_An needs n >= 2");
  AnData out;
  out.n = n;
  const std::size_t nv = n + 1;

  SparseSeries sum(nv);
  for (const auto& r : cube(n, n - 1)) {
    if (r.weight() % n != 0) continue;
    out.D.push_back(r);
    sum.add_term(append(r, static_cast<std::uint32_t>(r.weight() / n)), 1);
    if (r.weight() == n) ++out.t;
  }
  Presentation& p = out.presentation;
  p.nvars = nv;
  p.W = times_binomial(sum, ExponentVector(std::vector<std::uint32_t>(nv, 1)));
  for (unsigned i = 0; i < n; ++i) {
    ExponentVector nu(nv);
    nu[i] = n;
    nu[n] = 1;
    p.K.emplace(nu, 1);
  }

  const ExponentVector ones(std::vector<std::uint32_t>(nv, 1));
  for (const auto& r : cube(n, n)) {
    if (r.weight() != n) continue;
    ExponentVector v = append(r, 1);
    if (v != ones) out.J.push_back(v);
  }
  out.d = binomial(2 * n - 1, n) - n - 1;

  out.alpha_star.assign(nv, Rational(1, n));
  out.alpha_star[n] = 0;
  out.beta.assign(nv, Rational(1));
  out.beta[n] = Rational(1) + Rational(1, out.t);

  const Rational inv_t(1, out.t), inv_nt(1, out.t * n);
  for (const auto& v : out.J) out.beta_coefficients.emplace(v, p.K.count(v) ? inv_nt : inv_t);
  out.beta_coefficients.emplace(ExponentVector::unit(nv, n), inv_t);
  return out;
}

bool verify_presentation(const Presentation& p, const ToricMatrix& a, const std::vector<long>& b,
                         bool restricted, std::uint64_t n) {
  if (p.nvars != a.n) throw DimensionMismatch("presentation and matrix dimensions differ");
  SparseSeries expected(a.n, n);
  for (const auto& nu : kernel_monoid(a, b, n)) {
    bool has_zero = std::any_of(nu.entries().begin(), nu.entries().end(), [](auto x) { return x == 0; });
    if (!restricted || has_zero) expected.add_term(nu, 1);
  }
  if (p.empty) return expected.is_zero();
  return p.expand(n).terms() == expected.terms();
}

Integer toric_constant(const ToricMatrix& a) {
  if (a.n >= 40) throw BudgetExceeded("C(A) enumeration over 2^n sign vectors is too large");
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << a.n); ++mask) {
    bool ok = true;
    for (const auto& row : a.rows) {
      long odd = 0;
      for (std::size_t i = 0; i < a.n; ++i) {
        if ((mask >> i) & 1) odd += std::labs(row[i]) & 1;
      }
      if (odd & 1) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  }
  return Integer(static_cast<unsigned long>(count / 2));
}

AnalyticData analytic_data(const Presentation& p, const ToricMatrix& a, AnalyticOptions options) {
  if (p.nvars != a.n) throw DimensionMismatch("presentation and matrix dimensions differ");
  if (p.empty) throw InvalidInput("analytic data of an empty presentation");
  if (p.W.constant_term() != 1) throw InvalidInput("analytic data needs W(0) = 1");

  AnalyticData out;
  std::vector<ExponentVector> points;
  for (const auto& [nu, c] : p.K) {
    points.push_back(nu);
    out.cprime[nu] += c;
  }
  for (const auto& [nu, u] : p.W.terms()) {
    if (nu.is_zero()) continue;
    points.push_back(nu);
    out.cprime[nu] += u;
  }
  out.I = PointSet::from(a.n, points);
  out.dual = dual(out.I, {options.threads});
  out.CA = toric_constant(a);

  for (const auto& v : out.dual.vertices) {
    VertexRecord rec;
    rec.alpha = v.coords;
    rec.contact = v.contact;
    rec.zeros = v.zeros;
    rec.degree = v.degree(a.n);
    Rational weight = 0;
    for (const auto& x : v.coords) weight += x;
    rec.minimal = weight == out.dual.index;
    for (const auto& nu : v.contact) {
      const Integer& c = out.cprime.at(nu);
      if (c != 1) {
        rec.cprime_ok = false;
        out.cprime_ok = false;
        std::string at;
        for (const auto& x : v.coords) at += (at.empty() ? "" : ",") + x.get_str();
        out.violations.push_back("c'" + nu.to_string() + " = " + c.get_str() + " at vertex (" + at + ")");
      }
    }
    out.vertices.push_back(std::move(rec));
  }
  if (!out.cprime_ok && options.throw_on_violation) throw CprimeViolation(out.violations.front());
  return out;
}

Real prime_power(std::uint64_t p, const Rational& q) {
  Real lp = log(Real(p));
  Real e = Real(q.get_num().get_str()) / Real(q.get_den().get_str());
  return exp(-e * lp);
}

HValue H_alpha_value(const Presentation& p, const RationalVector& alpha, std::uint64_t prime_cutoff) {
  if (alpha.size() != p.nvars) throw DimensionMismatch("alpha has wrong dimension");
  if (p.empty) throw InvalidInput("H_alpha of an empty presentation");
  std::vector<ExponentVector> points;
  for (const auto& [nu, c] : p.K) points.push_back(nu);
  for (const auto& [nu, u] : p.W.terms()) {
    if (!nu.is_zero()) points.push_back(nu);
  }
  PointSet I = PointSet::from(p.nvars, points);
  auto contact = contact_set(I, alpha);

  HValue h;
  h.contact_count = contact.size();
  h.u = 2;
  for (const auto& nu : I.points) {
    if (!contact.count(nu)) h.u = std::min(h.u, nu.dot(alpha));
  }

  // Each W term and each K factor only needs p^{-<nu, alpha>}.
  std::vector<std::pair<Rational, Integer>> w_terms;
  for (const auto& [nu, u] : p.W.terms()) w_terms.emplace_back(nu.dot(alpha), u);
  std::vector<std::pair<Rational, unsigned>> k_terms;
  for (const auto& [nu, c] : p.K) k_terms.emplace_back(nu.dot(alpha), c);

  auto primes = primes_up_to(prime_cutoff);
  h.primes = primes.size();
  h.log_value = 0;
  h.min_factor = 1;
  Real tail_constant = 0;
  for (auto q : primes) {
    Real inv_p = Real(1) / Real(q);
    Real f = pow(Real(1) - inv_p, static_cast<int>(contact.size()));
    Real w = 0;
    for (const auto& [e, u] : w_terms) w += Real(u.get_str()) * prime_power(q, e);
    f *= w;
    for (const auto& [e, c] : k_terms) f /= pow(Real(1) - prime_power(q, e), static_cast<int>(c));
    if (!(f > 0)) throw NonPositiveFactor("H_alpha factor at p = " + std::to_string(q) + " is not positive");
    h.min_factor = std::min(h.min_factor, f);
    Real lf = log(f);
    h.log_value += lf;
    if (2 * q > prime_cutoff) tail_constant = std::max(tail_constant, abs(lf) / prime_power(q, h.u));
  }
  h.value = exp(h.log_value);
  if (h.u > 1 && prime_cutoff >= 2) {
    Rational um1 = h.u - 1;
    Real u1 = Real(um1.get_num().get_str()) / Real(um1.get_den().get_str());
    h.log_tail_bound = tail_constant * prime_power(prime_cutoff, um1) / u1;
  } else {
    h.log_tail_bound = std::numeric_limits<Real>::infinity();
  }
  return h;
}

}  // namespace mvz

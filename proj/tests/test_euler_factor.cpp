#include <gtest/gtest.h>

#include "mvz/errors.hpp"
#include "mvz/euler_factor.hpp"
#include "mvz/groupzeta.hpp"
#include "mvz/toric.hpp"
#include "naive.hpp"
#include "support/random.hpp"

using namespace mvz;
using testing_support::random_polynomial;

namespace {

SparseSeries poly(std::size_t n, std::vector<std::pair<ExponentVector, Integer>> terms) {
  return SparseSeries::from_terms(n, terms);
}

SparseSeries one_plus_x() { return poly(1, {{{0}, 1}, {{1}, 1}}); }

/// prod (1 - X^m)^{e} as an exact polynomial, for e >= 0 only.
SparseSeries binomial_product(std::size_t n, const std::vector<std::pair<ExponentVector, unsigned>>& factors) {
  SparseSeries h = SparseSeries::one(n);
  for (const auto& [m, e] : factors) {
    for (unsigned k = 0; k < e; ++k) h = times_binomial(h, m);
  }
  return h;
}

}  // namespace

TEST(Factorize, Examples) {
  auto f = factorize(poly(2, {{{0, 0}, 1}, {{1, 1}, -1}}), 8);
  EXPECT_EQ(f.exponents, (std::map<ExponentVector, Integer>{{{1, 1}, 1}}));

  auto g = factorize(one_plus_x(), 8);
  EXPECT_EQ(g.exponents, (std::map<ExponentVector, Integer>{{{1}, -1}, {{2}, 1}}));
  ASSERT_TRUE(g.residual.has_value());
  EXPECT_EQ(g.residual->terms(), SparseSeries::one(1).terms());

  EXPECT_TRUE(factorize(SparseSeries::one(3), 10).exponents.empty());

  auto r = factorize(poly(1, {{{0}, 1}, {{3}, 2}}), 30);
  EXPECT_EQ(r.exponent(ExponentVector({3})), -2);
  std::size_t beyond = 0;
  for (const auto& [m, e] : r.exponents) beyond += m.weight() > 20;
  EXPECT_GT(beyond, 0u);

  EXPECT_THROW(factorize(poly(1, {{{0}, 2}, {{1}, 1}}), 4), ConstantTermNotOne);
}

TEST(Factorize, UnivariateMatchesExpOfLogOracle) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    SparseSeries h = random_polynomial(rng, 1, 5);
    const unsigned n = 15;
    auto f = factorize(h, n);
    std::map<unsigned, long> e;
    for (const auto& [m, x] : f.exponents) e[m[0]] = x.get_si();
    auto coeffs = oracle::univariate_product(e, n);
    for (std::uint32_t j = 0; j <= n; ++j) EXPECT_EQ(coeffs[j], h.coeff(ExponentVector({j}))) << h.to_string();
  }
}

TEST(Reconstruct, Examples) {
  EXPECT_EQ(reconstruct(factorize(one_plus_x(), 8), 8).terms(), one_plus_x().terms());
  CyclotomicFactorization empty;
  empty.nvars = 2;
  empty.cutoff = 5;
  EXPECT_EQ(reconstruct(empty, 5).terms(), SparseSeries::one(2).terms());
  auto h = poly(2, {{{0, 0}, 1}, {{1, 1}, -1}});
  EXPECT_EQ(reconstruct(factorize(h, 5), 5).terms(), h.terms());
  EXPECT_THROW(reconstruct(factorize(h, 5), 6), CutoffExceeded);
}

TEST(Factorize, RoundTripOnRandomPolynomials) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    SparseSeries h = random_polynomial(rng);
    auto f = factorize(h, 12);
    EXPECT_EQ(reconstruct(f, 12).terms(), h.truncated(12).terms()) << h.to_string();
  }
}

TEST(Factorize, ExponentsAddUnderMultiplication) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    SparseSeries a = random_polynomial(rng, 2, 3);
    SparseSeries b = random_polynomial(rng, 2, 3);
    if (a.nvars() != b.nvars()) continue;
    const std::uint64_t n = 9;
    auto fa = factorize(a, n), fb = factorize(b, n), fab = factorize(a * b, n);
    std::map<ExponentVector, Integer> sum = fa.exponents;
    for (const auto& [m, e] : fb.exponents) sum[m] += e;
    std::erase_if(sum, [](const auto& kv) { return kv.second == 0; });
    EXPECT_EQ(sum, fab.exponents);
  }
}

TEST(CyclotomicTest, Examples) {
  auto v = cyclotomic_test(poly(1, {{{0}, 1}, {{1}, 1}, {{2}, 1}}));
  EXPECT_TRUE(v.cyclotomic);
  EXPECT_EQ(v.exponents, (std::map<ExponentVector, Integer>{{{1}, -1}, {{3}, 1}}));

  auto w = cyclotomic_test(poly(1, {{{0}, 1}, {{3}, 2}}), 30);
  EXPECT_FALSE(w.cyclotomic);
  EXPECT_EQ(w.bound, 30u);
  ASSERT_TRUE(w.witness.has_value());
  EXPECT_NE(w.exponents.at(*w.witness), 0);

  auto w3 = cyclotomic_test(presentation_An(3).presentation.W, 30);
  EXPECT_FALSE(w3.cyclotomic);
}

TEST(CyclotomicTest, DefaultBoundIsFourTimesDegree) {
  auto v = cyclotomic_test(poly(1, {{{0}, 1}, {{3}, 2}}));
  EXPECT_EQ(v.bound, 12u);
}

TEST(CyclotomicTest, HandBuiltProductsAreCertified) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 1 + rng() % 2;
    std::vector<std::pair<ExponentVector, unsigned>> num, den;
    for (int k = 0; k < 3; ++k) {
      ExponentVector m(n);
      m[rng() % n] = 1 + rng() % 3;
      if (n == 2 && rng() % 2) m[1 - (rng() % 2)] += 1;
      unsigned e = 1 + rng() % 3;
      (k == 0 ? den : num).emplace_back(m, e);
    }
    // (1 - X^m)^e for the numerator, divided by a factor that divides it:
    // use (1 - X^{2m}) over (1 - X^m), which is 1 + X^m.
    SparseSeries h = binomial_product(n, num);
    for (const auto& [m, e] : den) {
      for (unsigned k = 0; k < e; ++k) h = *divide_by_binomial(times_binomial(h, m.scaled(2)), m);
    }
    auto v = cyclotomic_test(h);
    EXPECT_TRUE(v.cyclotomic) << h.to_string();
    CyclotomicFactorization f;
    f.nvars = n;
    f.cutoff = h.degree();
    f.exponents = v.exponents;
    EXPECT_EQ(reconstruct(f, h.degree()).terms(), h.truncated(h.degree()).terms());
  }
}

TEST(CyclotomicTest, PerturbedProductsAreRejected) {
  auto h = times_binomial(times_binomial(SparseSeries::one(1), ExponentVector({1})), ExponentVector({2}));
  h.add_term(ExponentVector({2}), 1);
  EXPECT_FALSE(cyclotomic_test(h).cyclotomic);
}

TEST(ZetaTranslation, OnePlusXIsZetaOverZetaOfTwiceS) {
  auto z = zeta_translation(factorize(one_plus_x(), 8));
  ASSERT_EQ(z.size(), 2u);
  EXPECT_EQ(z[0].form, ExponentVector({1}));
  EXPECT_EQ(z[0].gamma, 1);
  EXPECT_EQ(z[1].form, ExponentVector({2}));
  EXPECT_EQ(z[1].gamma, -1);

  // Dirichlet coefficients of zeta(s)^{g1} zeta(2s)^{g2}: zeta(ks)^{-1}
  // contributes mu(j) at n = j^k, zeta(ks) contributes 1 at every k-th power.
  const unsigned limit = 100;
  std::vector<long> coeff(limit + 1, 0);
  coeff[1] = 1;
  for (const auto& f : z) {
    unsigned k = f.form[0];
    std::vector<long> factor(limit + 1, 0);
    for (unsigned j = 1;; ++j) {
      unsigned long q = 1;
      for (unsigned i = 0; i < k; ++i) q *= j;
      if (q > limit) break;
      long mu = 1;
      unsigned x = j;
      for (unsigned p = 2; p <= x; ++p) {
        if (x % p) continue;
        x /= p;
        mu = x % p == 0 ? 0 : -mu;
        while (x % p == 0) x /= p;
      }
      factor[q] = f.gamma == 1 ? 1 : mu;
    }
    std::vector<long> next(limit + 1, 0);
    for (unsigned a = 1; a <= limit; ++a) {
      for (unsigned b = 1; a * b <= limit; ++b) next[a * b] += coeff[a] * factor[b];
    }
    coeff = next;
  }
  auto expected = oracle::squarefree_indicator(limit);
  for (unsigned n = 1; n <= limit; ++n) EXPECT_EQ(coeff[n], expected[n]) << n;
}

TEST(ZetaTranslation, SingleBinomial) {
  auto z = zeta_translation(factorize(poly(2, {{{0, 0}, 1}, {{1, 1}, -1}}), 6));
  ASSERT_EQ(z.size(), 1u);
  EXPECT_EQ(z[0].form, ExponentVector({1, 1}));
  EXPECT_EQ(z[0].gamma, -1);
}

TEST(ZetaTranslation, Gsp6HasZetaOfSMinusFour) {
  FactorizeOptions o;
  o.prime_var = 0;
  auto f = factorize(gsp6_polynomial(), 8, o);
  EXPECT_EQ(f.exponent(ExponentVector({4, 1})), -1);
  auto z = zeta_translation(f);
  bool found = false;
  for (const auto& x : z) found = found || (x.form == ExponentVector({1}) && x.shift == 4 && x.gamma == 1);
  EXPECT_TRUE(found);
  for (std::size_t i = 1; i < z.size(); ++i) {
    EXPECT_TRUE(z[i - 1].shift < z[i].shift || (z[i - 1].shift == z[i].shift && z[i - 1].form < z[i].form));
  }
}

TEST(Boundary, Examples) {
  auto b = boundary(poly(2, {{{0, 0}, 1}, {{1, 1}, -1}}), std::nullopt, BoundaryVariant::Vsharp);
  ASSERT_EQ(b.halfspaces.size(), 1u);
  EXPECT_EQ(b.halfspaces[0].nu, ExponentVector({1, 1}));
  EXPECT_EQ(b.halfspaces[0].k, 0u);
  EXPECT_EQ(b.positivity, 0u);

  auto v = boundary(poly(2, {{{0, 0}, 1}, {{1, 1}, -1}}), std::nullopt, BoundaryVariant::V);
  EXPECT_EQ(v.positivity, 2u);
  EXPECT_EQ(v.halfspaces.size(), 3u);

  auto g = boundary(gsp6_polynomial(), 0, BoundaryVariant::Vsharp);
  ASSERT_TRUE(g.beta.has_value());
  EXPECT_EQ(g.beta->beta0.value, Rational(4));
  EXPECT_EQ(g.beta->beta1.value, Rational(4));

  auto h = boundary(poly(2, {{{0, 0}, 1}, {{1, 1}, 1}, {{5, 2}, 1}}), 0, BoundaryVariant::Vsharp);
  EXPECT_EQ(h.beta->beta1.value, Rational(5, 2));
  EXPECT_EQ(h.beta->beta0.value, Rational(5, 2));
}

TEST(Boundary, HalfspacesFollowPrimeLevels) {
  // h = 1 + X Y + X^2 Y^3 + X^2 Y^5 with X the prime variable.
  auto h = poly(2, {{{0, 0}, 1}, {{1, 1}, 1}, {{2, 3}, 1}, {{2, 5}, 1}});
  auto b = boundary(h, 0, BoundaryVariant::Vsharp);
  ASSERT_EQ(b.halfspaces.size(), 2u);
  EXPECT_EQ(b.halfspaces[0].nu, ExponentVector({1}));
  EXPECT_EQ(b.halfspaces[0].k, 1u);
  EXPECT_EQ(b.halfspaces[1].nu, ExponentVector({3}));
  EXPECT_EQ(b.halfspaces[1].k, 2u);
}

TEST(Boundary, BetasAgreeOnRandomBivariatePolynomials) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    SparseSeries h = testing_support::random_bivariate(rng);
    auto b = boundary_abscissas(h, 0);
    EXPECT_EQ(b.beta0, b.beta1) << h.to_string();
  }
}

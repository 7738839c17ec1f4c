#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "mvz/errors.hpp"
#include "mvz/groupzeta.hpp"
#include "support/random.hpp"

using namespace mvz;

namespace {

ConeData cone(std::vector<std::pair<long, long>> pairs) {
  std::vector<std::pair<Integer, Integer>> out;
  for (auto [a, b] : pairs) out.emplace_back(a, b);
  return ConeData::from_pairs(out);
}

}  // namespace

TEST(LeadingPole, Examples) {
  auto one = leading_pole(cone({{1, 0}}));
  EXPECT_EQ(one.alpha0, std::optional<Rational>(1));
  EXPECT_EQ(one.m0, 1u);

  auto two = leading_pole(cone({{2, 1}, {1, 1}, {0, 2}}));
  EXPECT_EQ(two.alpha0, std::optional<Rational>(0));
  EXPECT_EQ(two.m0, 2u);

  auto none = leading_pole(cone({{0, 1}, {0, 2}}));
  EXPECT_FALSE(none.alpha0.has_value());
  EXPECT_EQ(none.m0, 0u);
}

TEST(LeadingPole, RejectsBadPairs) {
  EXPECT_THROW(cone({}), InvalidInput);
  EXPECT_THROW(cone({{0, 0}}), InvalidInput);
  EXPECT_THROW(cone({{-1, 2}}), InvalidInput);
}

TEST(LeadingPole, InvariantUnderPermutationAndLowerInsertions) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::pair<long, long>> pairs;
    std::size_t count = 1 + rng() % 6;
    while (pairs.size() < count) {
      long a = rng() % 5, b = rng() % 5;
      if (a + b > 0) pairs.emplace_back(a, b);
    }
    auto base = leading_pole(cone(pairs));
    std::shuffle(pairs.begin(), pairs.end(), rng);
    auto shuffled = leading_pole(cone(pairs));
    EXPECT_EQ(base.alpha0, shuffled.alpha0);
    EXPECT_EQ(base.m0, shuffled.m0);
    if (base.alpha0) {
      // (A, B) = (1, B) has alpha = 1 - B.
      long b = 0;
      while (Rational(1 - b) >= *base.alpha0) ++b;
      pairs.emplace_back(1, b);
      auto bigger = leading_pole(cone(pairs));
      EXPECT_EQ(bigger.alpha0, base.alpha0);
      EXPECT_EQ(bigger.m0, base.m0);
    }
  }
}

TEST(UniformBoundary, Examples) {
  auto g = uniform_boundary(gsp6_polynomial());
  EXPECT_EQ(g.beta0.value, Rational(4));
  EXPECT_EQ(g.beta1.value, Rational(4));
  EXPECT_TRUE(g.equal);

  auto xy = SparseSeries::from_terms(2, {{{0, 0}, 1}, {{1, 1}, 1}});
  EXPECT_EQ(uniform_boundary(xy).beta0.value, Rational(1));
  EXPECT_TRUE(uniform_boundary(xy).equal);

  auto h = SparseSeries::from_terms(2, {{{0, 0}, 1}, {{3, 1}, 1}, {{5, 2}, 1}});
  EXPECT_EQ(uniform_boundary(h).beta0.value, Rational(3));
  EXPECT_EQ(uniform_boundary(h).beta1.value, Rational(3));

  EXPECT_THROW(uniform_boundary(SparseSeries::one(2)), ZeroH);
  EXPECT_THROW(uniform_boundary(SparseSeries::from_terms(2, {{{0, 0}, 2}})), ConstantTermNotOne);
}

TEST(UniformBoundary, EqualOnRandomPolynomials) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 200; ++trial) {
    auto h = testing_support::random_bivariate(rng);
    EXPECT_TRUE(uniform_boundary(h).equal) << h.to_string();
  }
}

TEST(UniformBoundary, AlphaZeroIsRationalWhenSomeAIsPositive) {
  auto p = leading_pole(cone({{3, 1}, {2, 0}, {0, 4}}));
  ASSERT_TRUE(p.alpha0.has_value());
  EXPECT_EQ(*p.alpha0, Rational(1, 2));
}

#include <gtest/gtest.h>

#include "json.hpp"
#include "mvz/counting.hpp"
#include "mvz/errors.hpp"
#include "naive.hpp"
#include "support/random.hpp"

#include <fstream>

using namespace mvz;

namespace {

nlohmann::json fixtures() {
  std::ifstream in(std::string(MVZ_FIXTURE_DIR) + "/counting.json");
  return nlohmann::json::parse(in);
}

}  // namespace

TEST(BoxCount, Examples) {
  auto a3 = matrix_An(3);
  EXPECT_EQ(box_count(a3, {{1, 1, 1, 1}}), 4);
  auto diag = ToricMatrix::from_rows({{1, -1}});
  EXPECT_EQ(box_count(diag, {{1, 1}}), toric_constant(diag));
  EXPECT_THROW(box_count(a3, {{1, 1}}), DimensionMismatch);
}

TEST(BoxCount, A3FixtureFromNaiveEnumerator) {
  EXPECT_EQ(box_count(matrix_An(3), {{10, 10, 10, 10}}).get_str(), fixtures()["box_A3_10"].get<std::string>());
}

TEST(BoxCount, MatchesNaiveOnRandomMatrices) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    ToricMatrix a = testing_support::random_zero_sum_matrix(rng);
    BoxSpec box;
    for (std::size_t i = 0; i < a.n; ++i) box.bounds.push_back(1 + rng() % 12);
    EXPECT_EQ(box_count(a, box), Integer(static_cast<unsigned long>(oracle::box_count(a.rows, box.bounds))));
  }
}

TEST(BoxCount, MonotoneInEveryBound) {
  std::mt19937_64 rng(22);
  auto a3 = matrix_An(3);
  for (int trial = 0; trial < 20; ++trial) {
    BoxSpec box;
    for (int i = 0; i < 4; ++i) box.bounds.push_back(1 + rng() % 15);
    Integer base = box_count(a3, box);
    for (int i = 0; i < 4; ++i) {
      BoxSpec bigger = box;
      bigger.bounds[i] += 1 + rng() % 5;
      EXPECT_GE(box_count(a3, bigger), base);
    }
  }
}

TEST(BoxCount, ShardedEqualsSingleThreaded) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    ToricMatrix a = testing_support::random_zero_sum_matrix(rng);
    BoxSpec box;
    for (std::size_t i = 0; i < a.n; ++i) box.bounds.push_back(5 + rng() % 20);
    EXPECT_EQ(box_count(a, box, {1}), box_count(a, box, {8}));
  }
}

TEST(BoxSpec, FromGrowth) {
  auto box = BoxSpec::from_growth(100, {Rational(1), Rational(1, 2), Rational(3, 2), Rational(0)});
  EXPECT_EQ(box.bounds, (std::vector<std::uint64_t>{100, 10, 1000, 1}));
  EXPECT_EQ(BoxSpec::from_growth(10, {Rational(1, 3)}).bounds, std::vector<std::uint64_t>{2});
}

TEST(Census, SmallExamples) {
  EXPECT_EQ(nth_power_census(3, 1), 4);
  EXPECT_EQ(nth_power_census(3, 2), 4);
  EXPECT_THROW(nth_power_census(1, 5), InvalidInput);
}

TEST(Census, FixturesFromNaiveEnumerator) {
  auto f = fixtures()["census_n3"];
  for (auto it = f.begin(); it != f.end(); ++it) {
    EXPECT_EQ(nth_power_census(3, std::stoull(it.key())).get_str(), it.value().get<std::string>()) << it.key();
  }
}

TEST(Census, MatchesNaiveForSmallParameters) {
  for (unsigned n = 2; n <= 4; ++n) {
    for (std::uint64_t t : {1, 3, 7, 12}) {
      EXPECT_EQ(nth_power_census(n, t), Integer(static_cast<unsigned long>(oracle::census(n, t)))) << n << " " << t;
    }
  }
}

TEST(Census, ThreadCountDoesNotChangeTheResult) { EXPECT_EQ(nth_power_census(3, 200, {1}), nth_power_census(3, 200, {8})); }

TEST(Census, RatioIsNondecreasingOnTheFixtureGrid) {
  auto f = fixtures()["census_n3"];
  mpq_class prev = 0;
  for (const char* t : {"10", "100", "1000"}) {
    mpq_class r(mpz_class(f[t].get<std::string>()), mpz_class(t));
    EXPECT_GE(r, prev) << t;
    prev = r;
  }
}

TEST(DirichletCompare, Examples) {
  auto a3 = matrix_An(3);
  EXPECT_TRUE(dirichlet_compare(presentation_An(3).presentation, a3, {2, 3, 5, 7}, 4));
  Presentation bad = presentation_An(3).presentation;
  bad.W.add_term(ExponentVector({1, 1, 1, 0}), 1);
  EXPECT_FALSE(dirichlet_compare(bad, a3, {2}, 3));
  auto diag = ToricMatrix::from_rows({{1, -1}});
  EXPECT_TRUE(dirichlet_compare(restricted_presentation(diag), diag, {2}, 6));
}

TEST(Subgroups, Examples) {
  EXPECT_EQ(subgroup_count(2, 2, 0), 5);
  EXPECT_EQ(subgroup_count(1, 12, 0), 6);
  EXPECT_EQ(subgroup_count(1, 30, 0), 8);
  EXPECT_EQ(subgroup_count(1, 1, 0), 1);
  EXPECT_EQ(subgroup_count(1, 1, 3), 1);
  // Klein group: 1 + 3 * 2 + 4 for a = 1.
  EXPECT_EQ(subgroup_count(2, 2, 1), 11);
  EXPECT_THROW(subgroup_count(2, 3, 0), InvalidInput);
  EXPECT_THROW(subgroup_count(64, 64, 0, 1024), BudgetExceeded);
}

TEST(Subgroups, LatticeIsSelfDual) {
  for (std::uint64_t n2 = 1; n2 <= 24; ++n2) {
    for (std::uint64_t n1 = 1; n1 <= n2; ++n1) {
      if (n2 % n1) continue;
      auto by_order = subgroup_orders(n1, n2);
      for (const auto& [d, c] : by_order) {
        auto it = by_order.find(n1 * n2 / d);
        ASSERT_NE(it, by_order.end());
        EXPECT_EQ(it->second, c) << n1 << " " << n2 << " " << d;
      }
    }
  }
}

TEST(Abelian, DisplayedProductForAZero) {
  auto r = abelian_euler_check(0, 12);
  EXPECT_TRUE(r.ok);
  EXPECT_GT(r.compared, 12u);
  EXPECT_TRUE(abelian_euler_check(1, 1).ok);
}

TEST(Abelian, DisplayedProductDisagreesForAOne) {
  auto r = abelian_euler_check(1, 8);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(abelian_product_coefficient(1, 1, 2, AbelianVariant::Displayed), 5);
  EXPECT_EQ(subgroup_count(1, 2, 1), 3);
}

TEST(Abelian, CorrectedProductAgreesForSmallA) {
  for (unsigned a = 0; a <= 2; ++a) EXPECT_TRUE(abelian_euler_check(a, 12, AbelianVariant::Corrected).ok) << a;
}

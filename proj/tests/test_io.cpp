#include <gtest/gtest.h>

#include "mvz/errors.hpp"
#include "mvz/io.hpp"

using namespace mvz;
using io::Json;

TEST(Io, SeriesRoundTrip) {
  auto j = Json::parse(R"({"nvars": 2, "terms": [{"exp": [0, 0], "coeff": "1"},
                                                 {"exp": [1, 2], "coeff": "-123456789012345678901234567890"},
                                                 {"exp": [1, 0], "coeff": 4}]})");
  SparseSeries h = io::parse_series(j);
  EXPECT_EQ(h.size(), 3u);
  EXPECT_EQ(h.coeff(ExponentVector({1, 2})), Integer("-123456789012345678901234567890"));
  Json back = io::to_json(h);
  EXPECT_EQ(back["terms"][1]["exp"], Json::parse("[1, 0]"));
  EXPECT_EQ(back["terms"][2]["coeff"], "-123456789012345678901234567890");
  EXPECT_EQ(io::parse_series(back), h);
}

TEST(Io, SeriesErrors) {
  EXPECT_THROW(io::parse_series(Json::parse(R"({"terms": []})")), InvalidInput);
  EXPECT_THROW(io::parse_series(Json::parse(R"({"nvars": 2, "terms": [{"exp": [1], "coeff": "1"}]})")),
               DimensionMismatch);
  EXPECT_THROW(io::parse_series(Json::parse(R"({"nvars": 1, "terms": [{"exp": [-1], "coeff": "1"}]})")),
               InvalidInput);
  EXPECT_THROW(io::parse_series(Json::parse(R"({"nvars": 1, "terms": [{"exp": [1], "coeff": "x"}]})")),
               InvalidInput);
}

TEST(Io, MatrixPointsAndCone) {
  auto a = io::parse_matrix(Json::parse(R"({"rows": [[1, 1, 1, -3]]})"));
  EXPECT_EQ(a.n, 4u);
  EXPECT_THROW(io::parse_matrix(Json::parse(R"({"rows": [[1, 2], [1]]})")), InvalidInput);
  auto p = io::parse_point_set(Json::parse(R"({"nvars": 2, "points": [[1, 0], [0, 1]]})"));
  EXPECT_EQ(p.points.size(), 2u);
  auto c = io::parse_cone(Json::parse(R"({"pairs": [[2, 1], ["1", "1"]]})"));
  EXPECT_EQ(c.pairs.size(), 2u);
  EXPECT_THROW(io::parse_cone(Json::parse(R"({"pairs": [[2]]})")), InvalidInput);
}

TEST(Io, ScalarFormats) {
  EXPECT_EQ(io::to_json(Rational(3)), "3/1");
  EXPECT_EQ(io::to_json(Rational(-2, 6)), "-1/3");
  EXPECT_EQ(io::to_json(Integer(-7)), "-7");
  EXPECT_EQ(io::to_json(Real("0.5"), 3), "5.000e-01");
  Abscissa inf;
  inf.infinite = true;
  EXPECT_EQ(io::to_json(inf), "inf");
}

TEST(Io, MissingFileIsMalformed) {
  try {
    io::read_file("/nonexistent/input.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "malformed_json");
  }
}

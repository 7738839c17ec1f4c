#include "mvz/io.hpp"

#include <fstream>
#include <sstream>

#include "mvz/errors.hpp"

namespace mvz::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw InvalidInput(what, "malformed_json"); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t as_size(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) malformed(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

long as_long(const Json& j, const char* what) {
  if (!j.is_number_integer()) malformed(std::string(what) + " must be an integer");
  return j.get<long>();
}

Integer as_integer(const Json& j, const char* what) {
  if (j.is_string()) return parse_integer(j.get<std::string>());
  if (j.is_number_integer()) return Integer(j.dump());
  malformed(std::string(what) + " must be an integer or a decimal string");
}

ExponentVector as_exponent(const Json& j, std::size_t nvars) {
  if (!j.is_array()) malformed("exponent must be an array");
  if (j.size() != nvars) throw DimensionMismatch("exponent " + j.dump() + " does not have " + std::to_string(nvars) + " entries");
  std::vector<std::uint32_t> e;
  for (const auto& x : j) {
    std::size_t v = as_size(x, "exponent entry");
    if (v > UINT32_MAX) malformed("exponent entry out of range");
    e.push_back(static_cast<std::uint32_t>(v));
  }
  return ExponentVector(std::move(e));
}

}  // namespace

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    malformed(path + ": " + e.what());
  }
}

SparseSeries parse_series(const Json& j) {
  std::size_t nvars = as_size(field(j, "nvars"), "nvars");
  if (nvars == 0) throw InvalidInput("series needs nvars >= 1");
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) malformed("terms must be an array");
  std::vector<std::pair<ExponentVector, Integer>> out;
  for (const auto& t : terms) out.emplace_back(as_exponent(field(t, "exp"), nvars), as_integer(field(t, "coeff"), "coeff"));
  return SparseSeries::from_terms(nvars, out);
}

PointSet parse_point_set(const Json& j) {
  std::size_t nvars = as_size(field(j, "nvars"), "nvars");
  const Json& pts = field(j, "points");
  if (!pts.is_array()) malformed("points must be an array");
  std::vector<ExponentVector> out;
  for (const auto& p : pts) out.push_back(as_exponent(p, nvars));
  return PointSet::from(nvars, out);
}

ToricMatrix parse_matrix(const Json& j) {
  const Json& rows = field(j, "rows");
  if (!rows.is_array()) malformed("rows must be an array");
  std::vector<std::vector<long>> out;
  for (const auto& r : rows) {
    if (!r.is_array()) malformed("each row must be an array");
    std::vector<long> row;
    for (const auto& x : r) row.push_back(as_long(x, "matrix entry"));
    out.push_back(std::move(row));
  }
  return ToricMatrix::from_rows(std::move(out));
}

ConeData parse_cone(const Json& j) {
  const Json& pairs = field(j, "pairs");
  if (!pairs.is_array()) malformed("pairs must be an array");
  std::vector<std::pair<Integer, Integer>> out;
  for (const auto& p : pairs) {
    if (!p.is_array() || p.size() != 2) malformed("each pair must be [A, B]");
    out.emplace_back(as_integer(p[0], "A"), as_integer(p[1], "B"));
  }
  return ConeData::from_pairs(std::move(out));
}

Json to_json(const Integer& z) { return z.get_str(); }

Json to_json(const Rational& q) { return to_fraction_string(q); }

Json to_json(const ExponentVector& e) { return Json(e.entries()); }

Json to_json(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_json(q));
  return a;
}

Json to_json(const SparseSeries& s) {
  Json j;
  j["nvars"] = s.nvars();
  if (s.cutoff()) j["cutoff"] = *s.cutoff();
  Json terms = Json::array();
  for (const auto& [e, c] : s.terms()) terms.push_back({{"exp", to_json(e)}, {"coeff", to_json(c)}});
  j["terms"] = std::move(terms);
  return j;
}

Json to_json(const Abscissa& a) {
  if (a.infinite) return "inf";
  return to_json(a.value);
}

Json to_json(const Real& x, int digits) {
  if (boost::multiprecision::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x.str(digits, std::ios_base::scientific);
}

}  // namespace mvz::io

#pragma once

#include <string>

#include "json.hpp"
#include "mvz/groupzeta.hpp"
#include "mvz/polyhedra.hpp"
#include "mvz/series.hpp"
#include "mvz/toric.hpp"

namespace mvz::io {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file; throws InvalidInput ("malformed_json") on
/// unreadable files or syntax errors.
Json read_file(const std::string& path);

/// {"nvars": n, "terms": [{"exp": [...], "coeff": "digits"}]}
SparseSeries parse_series(const Json& j);
/// {"nvars": n, "points": [[...], ...]}
PointSet parse_point_set(const Json& j);
/// {"rows": [[...], ...]}
ToricMatrix parse_matrix(const Json& j);
/// {"pairs": [[A, B], ...]}
ConeData parse_cone(const Json& j);

Json to_json(const Integer& z);
Json to_json(const Rational& q);
Json to_json(const ExponentVector& e);
Json to_json(const RationalVector& v);
Json to_json(const SparseSeries& s);
Json to_json(const Abscissa& a);
/// Scientific notation with a fixed number of fractional digits.
Json to_json(const Real& x, int digits = 20);

}  // namespace mvz::io

#pragma once

// JSON problem files:
//   {"rank": 2, "constraints": [[1,1]], "Q": [[1,0],[0,1]],
//    "v": {"support": [[1,0]], "magnitudes": ["1"]},
//    "w": {"support": [[1,0],[0,1]], "magnitudes": ["1/2","3"]}}
// Rationals travel as "p/q" strings. Integers may be JSON numbers or decimal
// strings (for values beyond 64 bits). "Q" defaults to the simplex
// {e_0, ..., e_N}; when both "Q" and "constraints" are absent the SL
// constraint (1, ..., 1) is added. "magnitudes" defaults to all ones.

#include <pairstab/pairs.hpp>

#include <json.hpp>

namespace pairstab::io {

using Json = nlohmann::json;

Json to_json(const Integer& z);
Json to_json(const LatticePoint& a);
Json to_json(const OnePS& u);
Json to_json(const PointSet& s);
Json to_json(const WeightedVector& v);
Json to_json(const Pair& p);

Integer integer_from_json(const Json& j);
LatticePoint point_from_json(const Json& j, std::size_t rank);
OnePS ops_from_json(const Json& j, std::size_t rank);
PointSet points_from_json(const Json& j, std::size_t rank);
WeightedVector weighted_from_json(const Json& j, std::size_t rank);
Pair pair_from_json(const Json& j);

Pair load_pair(const std::string& path);

}  // namespace pairstab::io

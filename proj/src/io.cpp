#include <pairstab/io.hpp>

#include <fstream>
#include <limits>

namespace pairstab::io {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<Integer> coords_from_json(const Json& j, std::size_t rank) {
  if (!j.is_array()) throw Error("expected an array of integers, got " + j.dump());
  if (j.size() != rank)
    throw Error("expected " + std::to_string(rank) + " coordinates, got " + std::to_string(j.size()) + " in " +
                j.dump());
  std::vector<Integer> out;
  for (const auto& c : j) out.push_back(integer_from_json(c));
  return out;
}

}  // namespace

Json to_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Json to_json(const LatticePoint& a) {
  Json out = Json::array();
  for (const auto& c : a.coords()) out.push_back(to_json(c));
  return out;
}

Json to_json(const OnePS& u) {
  Json out = Json::array();
  for (const auto& c : u.coords()) out.push_back(to_json(c));
  return out;
}

Json to_json(const PointSet& s) {
  Json out = Json::array();
  for (const auto& p : s) out.push_back(to_json(p));
  return out;
}

Json to_json(const WeightedVector& v) {
  Json support = Json::array(), mags = Json::array();
  for (const auto& [a, m] : v.magnitudes()) {
    support.push_back(to_json(a));
    mags.push_back(format_rational(m));
  }
  return Json{{"support", support}, {"magnitudes", mags}};
}

Json to_json(const Pair& p) {
  Json constraints = Json::array();
  for (const auto& c : p.problem.constraints()) constraints.push_back(to_json(c));
  return Json{{"rank", p.problem.rank()},
              {"constraints", constraints},
              {"Q", to_json(p.problem.reference())},
              {"v", to_json(p.v)},
              {"w", to_json(p.w)}};
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw Error("malformed integer " + j.dump());
    return z;
  }
  throw Error("expected an integer, got " + j.dump());
}

LatticePoint point_from_json(const Json& j, std::size_t rank) { return LatticePoint(coords_from_json(j, rank)); }

OnePS ops_from_json(const Json& j, std::size_t rank) { return OnePS(coords_from_json(j, rank)); }

PointSet points_from_json(const Json& j, std::size_t rank) {
  if (!j.is_array()) throw Error("expected an array of points, got " + j.dump());
  std::vector<LatticePoint> pts;
  for (const auto& p : j) pts.push_back(point_from_json(p, rank));
  if (pts.empty()) return PointSet(rank);
  return PointSet(std::move(pts));
}

WeightedVector weighted_from_json(const Json& j, std::size_t rank) {
  const Json& support = require(j, "support");
  if (!support.is_array() || support.empty()) throw Error("support must be a nonempty array");
  std::map<LatticePoint, Rational> mags;
  const bool has_mags = j.contains("magnitudes");
  if (has_mags && (!j["magnitudes"].is_array() || j["magnitudes"].size() != support.size()))
    throw Error("magnitudes must be an array matching the support");
  for (std::size_t i = 0; i < support.size(); ++i) {
    Rational m = 1;
    if (has_mags) {
      const Json& mj = j["magnitudes"][i];
      if (mj.is_string())
        m = parse_rational(mj.get<std::string>());
      else if (mj.is_number_integer())
        m = Rational(integer_from_json(mj));
      else
        throw Error("magnitudes must be rational strings, got " + mj.dump());
    }
    auto [it, inserted] = mags.emplace(point_from_json(support[i], rank), m);
    if (!inserted) throw Error("duplicate support point " + support[i].dump());
  }
  return WeightedVector(std::move(mags));
}

Pair pair_from_json(const Json& j) {
  if (!j.is_object()) throw Error("problem must be a JSON object");
  const Json& rank_j = require(j, "rank");
  if (!rank_j.is_number_integer() || rank_j.get<long long>() <= 0) throw Error("rank must be a positive integer");
  const auto rank = static_cast<std::size_t>(rank_j.get<long long>());

  std::vector<LatticePoint> constraints;
  if (j.contains("constraints")) {
    if (!j["constraints"].is_array()) throw Error("constraints must be an array");
    for (const auto& c : j["constraints"]) constraints.push_back(point_from_json(c, rank));
  }
  PointSet q(rank);
  if (j.contains("Q")) {
    q = points_from_json(j["Q"], rank);
  } else {
    std::vector<LatticePoint> simplex;
    for (std::size_t i = 0; i < rank; ++i) {
      auto e = LatticePoint::zero(rank);
      e[i] = 1;
      simplex.push_back(std::move(e));
    }
    q = PointSet(std::move(simplex));
    if (!j.contains("constraints")) constraints.emplace_back(std::vector<Integer>(rank, 1));
  }
  StabilityProblem problem(rank, std::move(constraints), std::move(q));
  return Pair(weighted_from_json(require(j, "v"), rank), weighted_from_json(require(j, "w"), rank),
              std::move(problem));
}

Pair load_pair(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open problem file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
  return pair_from_json(j);
}

}  // namespace pairstab::io

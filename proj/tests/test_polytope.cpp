#include <pairstab/linalg.hpp>
#include <pairstab/polytope.hpp>

#include "oracles.hpp"

#include <doctest.h>

using namespace pairstab;

namespace {

ContainmentContext mod(std::initializer_list<LatticePoint> dirs) { return ContainmentContext{dirs}; }

RationalVector q(std::initializer_list<Rational> xs) { return RationalVector(xs); }

// The two defining inequalities of a separating functional.
bool separates(const PointSet& a, const RationalVector& x, const RationalFunctional& g, const ContainmentContext& ctx) {
  for (const auto& d : ctx.mod_directions)
    if (pair(g, d) != 0) return false;
  for (const auto& p : a)
    if (!(pair(g, x) < pair(g, p))) return false;
  return true;
}

}  // namespace

TEST_CASE("contains_point") {
  CHECK(contains_point({{0, 0}, {2, 0}, {0, 2}}, LatticePoint{1, 1}));
  CHECK(contains_point({{1, 0}}, LatticePoint{1, 0}));
  CHECK(contains_point({{1, 0}, {0, 1}}, LatticePoint{0, 0}, mod({{1, 1}})));
  CHECK_FALSE(contains_point({{1, 0}, {0, 1}}, LatticePoint{0, 0}));
  CHECK(contains_point({{1, 0}, {0, 1}}, q({Rational(1, 2), Rational(1, 2)})));
  CHECK_THROWS_AS(contains_point({{1, 0}}, LatticePoint{1, 0, 0}), Error);
  CHECK_THROWS_AS(contains_point(PointSet(2), LatticePoint{1, 0}), Error);
}

TEST_CASE("hull_contains") {
  const PointSet tri{{0, 0}, {2, 0}, {0, 2}};
  CHECK(hull_contains(tri, {{1, 0}, {0, 1}}));
  CHECK(hull_contains(tri, tri));
  CHECK_FALSE(hull_contains({{1, 0}}, {{0, 1}}));
  CHECK(hull_contains(tri, PointSet(2)));
  CHECK_THROWS_AS(hull_contains(PointSet(2), tri), Error);
  CHECK_THROWS_AS(hull_contains(tri, {{1, 1, 1}}), Error);
}

TEST_CASE("separating_functional examples") {
  auto g1 = separating_functional({{1, 0}}, LatticePoint{0, 1});
  CHECK(g1.coords == q({1, -1}));
  auto g2 = separating_functional({{2, 0}}, LatticePoint{0, 0});
  CHECK(clear_denominators(g2) == OnePS{1, 0});
  auto g3 = separating_functional({{0, 1}, {1, 1}}, LatticePoint{0, 0});
  CHECK(g3.coords == q({0, 1}));
  CHECK_THROWS_AS(separating_functional({{0, 0}, {2, 0}}, LatticePoint{1, 0}), Error);
}

TEST_CASE("separating_functional respects mod directions") {
  // (2,0) vs (0,0) modulo (1,1): difference (2,0) projects to (1,-1).
  auto ctx = mod({{1, 1}});
  auto g = separating_functional({{2, 0}}, LatticePoint{0, 0}, ctx);
  CHECK(separates({{2, 0}}, q({0, 0}), g, ctx));
  CHECK(clear_denominators(g) == OnePS{1, -1});
}

TEST_CASE("minkowski_sum and scale") {
  CHECK(minkowski_sum({{1, 0}}, {{0, 1}}) == PointSet{{1, 1}});
  CHECK(scale({{1, 0}, {0, 1}}, 2) == PointSet{{2, 0}, {0, 2}});
  CHECK(minkowski_sum({{0, 0}, {1, 0}}, {{0, 0}, {0, 1}}) == PointSet{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK_THROWS_AS(scale({{1, 0}}, 0), Error);
  CHECK_THROWS_AS(scale({{1, 0}}, -1), Error);
}

TEST_CASE("min_functional") {
  CHECK(min_functional({{2, 0}, {0, 2}}, OnePS{1, -1}) == -2);
  CHECK(min_functional({{2, 0}, {0, 2}, {-3, 5}}, OnePS{0, 0}) == 0);
  CHECK(min_functional({{1, 1}}, OnePS{3, 4}) == 7);
  CHECK_THROWS_AS(min_functional(PointSet(2), OnePS{1, 0}), Error);
}

TEST_CASE("interior_contains") {
  CHECK(interior_contains({{-1, 0}, {1, 0}, {0, 1}, {0, -1}}, LatticePoint{0, 0}));
  CHECK_FALSE(interior_contains({{0, 0}, {1, 0}}, LatticePoint{1, 0}));
  CHECK(interior_contains({{1, 0}, {0, 1}}, q({Rational(1, 2), Rational(1, 2)})));
  CHECK_FALSE(interior_contains({{1, 0}, {0, 1}}, LatticePoint{0, 0}));
  CHECK(interior_contains({{1, 0}, {0, 1}}, LatticePoint{0, 0}, mod({{1, 1}})));
  CHECK_FALSE(interior_contains({{-1, 0}, {1, 0}, {0, 1}, {0, -1}}, LatticePoint{1, 0}));
}

TEST_CASE("min_norm_point") {
  auto r = min_norm_point({q({1, 1}), q({1, -1}), q({3, 0})});
  CHECK(r.point == q({1, 0}));
  CHECK(r.weights == q({Rational(1, 2), Rational(1, 2), 0}));
  auto z = min_norm_point({q({-1, 0}), q({1, 0}), q({0, 5})});
  CHECK(z.point == q({0, 0}));
}

TEST_CASE("hull_contains agrees with the half-space oracle (dim <= 3, |A| <= 8)") {
  oracle::Rng rng(2024);
  int agreements = 0, contained = 0;
  for (int k = 0; k < 400; ++k) {
    const auto rank = static_cast<std::size_t>(oracle::uniform(rng, 1, 3));
    const PointSet a = oracle::random_points(rng, rank, static_cast<std::size_t>(oracle::uniform(rng, 1, 8)), -4, 4);
    const PointSet b = oracle::random_points(rng, rank, static_cast<std::size_t>(oracle::uniform(rng, 1, 3)), -2, 2);
    std::vector<LatticePoint> dirs;
    if (rank >= 2 && oracle::uniform(rng, 0, 2) == 0) dirs.emplace_back(std::vector<Integer>(rank, 1));
    ContainmentContext ctx{dirs};
    const bool lp = hull_contains(a, b, ctx);
    CHECK(lp == oracle::halfspace_contains(a, b, dirs));
    agreements += 1;
    contained += lp ? 1 : 0;
    for (const auto& x : b) {
      if (contains_point(a, x, ctx)) continue;
      CHECK(separates(a, x.to_rational(), separating_functional(a, x, ctx), ctx));
    }
  }
  CHECK(contained > 40);
  CHECK(contained < 360);
}

TEST_CASE("scale(A, m) has the hull of the m-fold Minkowski sum") {
  oracle::Rng rng(7);
  for (int k = 0; k < 60; ++k) {
    const PointSet a = oracle::random_points(rng, 2, static_cast<std::size_t>(oracle::uniform(rng, 1, 5)), -3, 3);
    for (int m = 1; m <= 3; ++m) {
      PointSet sum = a;
      for (int i = 1; i < m; ++i) sum = minkowski_sum(sum, a);
      const PointSet s = scale(a, m);
      CHECK(hull_contains(sum, s));
      CHECK(hull_contains(s, sum));
    }
  }
}

#include <pairstab/futaki.hpp>

#include "oracles.hpp"

#include <doctest.h>

using namespace pairstab;

namespace {

Pair unit_pair(const PointSet& v, const PointSet& w, const StabilityProblem& pr) {
  return Pair(WeightedVector::unit(v), WeightedVector::unit(w), pr);
}

}  // namespace

TEST_CASE("stabilizer_subtorus examples") {
  const auto sl = StabilityProblem::special_linear(2);
  const auto free2 = StabilityProblem::cross_polytope(2);
  CHECK(stabilizer_subtorus(unit_pair({{1, 0}, {0, 1}}, {{1, 0}, {0, 1}}, sl)).rank() == 0);
  CHECK(stabilizer_subtorus(unit_pair({{1, 1}}, {{2, 2}}, free2)).rank() == 2);
  CHECK(stabilizer_subtorus(unit_pair({{0, 0}, {1, 0}, {0, 1}}, {{0, 0}, {1, 0}, {0, 1}}, free2)).rank() == 0);
  auto line = stabilizer_subtorus(unit_pair({{1, 0}, {2, 0}}, {{0, 1}}, free2));
  REQUIRE(line.rank() == 1);
  CHECK((line.basis[0] == OnePS{0, 1} || line.basis[0] == OnePS{0, -1}));
}

TEST_CASE("futaki_classical examples") {
  const auto free2 = StabilityProblem::cross_polytope(2);
  const Pair p = unit_pair({{1, 1}}, {{2, 2}}, free2);
  CHECK(futaki_classical(p, OnePS{1, 0}) == 1);
  CHECK(futaki_classical(p, OnePS{1, -1}) == 0);
  CHECK(futaki_classical(p, OnePS{0, 0}) == 0);
  CHECK_THROWS_AS(futaki_classical(unit_pair({{1, 0}, {0, 1}}, {{2, 2}}, free2), OnePS{1, 0}), Error);
  const Pair psl = unit_pair({{1, 1}}, {{2, 2}}, StabilityProblem::special_linear(2));
  CHECK(futaki_classical(psl, OnePS{1, -1}) == 0);
}

TEST_CASE("affine_span_test examples") {
  const PointSet v{{1, 0}, {0, 1}}, w{{2, 0}, {1, 1}};
  CHECK(affine_span_test(unit_pair(v, w, StabilityProblem::cross_polytope(2))) == AffineSpans::Disjoint);
  CHECK(affine_span_test(unit_pair(v, w, StabilityProblem::special_linear(2))) == AffineSpans::Equal);
  CHECK(affine_span_test(unit_pair(v, v, StabilityProblem::cross_polytope(2))) == AffineSpans::Equal);
}

TEST_CASE("vanishing on semistable pairs and finite automorphisms of stable ones") {
  oracle::Rng rng(47);
  int semi = 0, stab = 0;
  for (int k = 0; k < 200; ++k) {
    const Pair p = oracle::random_pair(rng, 4, 6);
    const auto st = stabilizer_subtorus(p);
    for (const auto& u : st.basis) {
      CHECK(in_stabilizer(p, u));
      CHECK(futaki_classical(p, u) == futaki_gen(u, p));
    }
    if (!t_semistable(p).semistable()) continue;
    ++semi;
    CHECK(affine_span_test(p) == AffineSpans::Equal);
    for (const auto& u : st.basis) CHECK(futaki_classical(p, u) == 0);
    if (stable(p, 12).kind == StableVerdict::Kind::Stable) {
      ++stab;
      CHECK(st.rank() == 0);
    }
  }
  CHECK(semi > 20);
  CHECK(stab > 5);
}

TEST_CASE("outputs ignore magnitudes") {
  oracle::Rng rng(53);
  for (int k = 0; k < 40; ++k) {
    const Pair p = oracle::random_pair(rng, 3, 5);
    const Pair q(oracle::random_weighted(rng, p.v.support()), oracle::random_weighted(rng, p.w.support()), p.problem);
    CHECK(stabilizer_subtorus(p).basis == stabilizer_subtorus(q).basis);
    CHECK(affine_span_test(p) == affine_span_test(q));
  }
}

#include <pairstab/futaki.hpp>

#include <pairstab/linalg.hpp>

namespace pairstab {

namespace {

// Within-support differences a - a_0 of both supports.
std::vector<RationalVector> support_differences(const Pair& p) {
  std::vector<RationalVector> out;
  for (const PointSet& s : {p.v.support(), p.w.support()})
    for (std::size_t i = 1; i < s.size(); ++i) out.push_back((s[i] - s[0]).to_rational());
  return out;
}

}  // namespace

StabilizerSubtorus stabilizer_subtorus(const Pair& p) {
  linalg::Matrix rows = support_differences(p);
  for (const auto& c : p.problem.constraints()) rows.push_back(c.to_rational());
  StabilizerSubtorus out;
  for (const auto& v : linalg::nullspace(std::move(rows), p.problem.rank()))
    out.basis.emplace_back(primitive_direction(v));
  return out;
}

bool in_stabilizer(const Pair& p, const OnePS& u) {
  if (!p.problem.admissible(u)) return false;
  for (const PointSet& s : {p.v.support(), p.w.support()}) {
    const Integer c = pair(u, s[0]);
    for (const auto& a : s)
      if (pair(u, a) != c) return false;
  }
  return true;
}

Integer futaki_classical(const Pair& p, const OnePS& u) {
  if (!in_stabilizer(p, u)) throw Error("futaki_classical: u is not in the stabilizer subtorus");
  return pair(u, p.w.support()[0]) - pair(u, p.v.support()[0]);
}

AffineSpans affine_span_test(const Pair& p) {
  auto span = support_differences(p);
  for (const auto& c : p.problem.constraints()) span.push_back(c.to_rational());
  const RationalVector offset = (p.w.support()[0] - p.v.support()[0]).to_rational();
  return linalg::in_span(span, offset) ? AffineSpans::Equal : AffineSpans::Disjoint;
}

}  // namespace pairstab

#include <pairstab/pairs.hpp>

#include <pairstab/linalg.hpp>

namespace pairstab {

namespace {

constexpr int kDegreeSearchLimit = 1 << 20;

RationalVector difference(const LatticePoint& a, const LatticePoint& b) { return (a - b).to_rational(); }

std::vector<RationalVector> rational_constraints(const StabilityProblem& problem) {
  std::vector<RationalVector> out;
  for (const auto& c : problem.constraints()) out.push_back(c.to_rational());
  return out;
}

}  // namespace

StabilityProblem::StabilityProblem(std::size_t rank, std::vector<LatticePoint> constraints, PointSet q)
    : rank_(rank), constraints_(std::move(constraints)), q_(std::move(q)) {
  if (rank_ == 0) throw Error("problem rank must be positive");
  if (q_.empty()) throw Error("reference polytope Q is empty");
  if (q_.rank() != rank_) throw Error("reference polytope Q has the wrong rank");
  ctx_.mod_directions = constraints_;
  ctx_.validate(rank_);
  if (affine_dimension(q_, ctx_) != rank_ || !interior_contains(q_, LatticePoint::zero(rank_), ctx_))
    throw Error("reference polytope Q must contain the origin in its strict interior");
}

StabilityProblem StabilityProblem::special_linear(std::size_t n_plus_one) {
  std::vector<LatticePoint> q;
  for (std::size_t i = 0; i < n_plus_one; ++i) {
    auto e = LatticePoint::zero(n_plus_one);
    e[i] = 1;
    q.push_back(std::move(e));
  }
  LatticePoint ones(std::vector<Integer>(n_plus_one, 1));
  return StabilityProblem(n_plus_one, {ones}, PointSet(std::move(q)));
}

StabilityProblem StabilityProblem::cross_polytope(std::size_t rank) {
  std::vector<LatticePoint> q;
  for (std::size_t i = 0; i < rank; ++i) {
    auto e = LatticePoint::zero(rank);
    e[i] = 1;
    q.push_back(e);
    e[i] = -1;
    q.push_back(e);
  }
  return StabilityProblem(rank, {}, PointSet(std::move(q)));
}

bool StabilityProblem::admissible(const OnePS& u) const {
  if (u.rank() != rank_) return false;
  for (const auto& c : constraints_)
    if (pair(u, c) != 0) return false;
  return true;
}

void StabilityProblem::require_admissible(const OnePS& u) const {
  if (u.rank() != rank_) throw Error("one-parameter subgroup has the wrong rank");
  if (!admissible(u)) throw Error("one-parameter subgroup does not annihilate the constraints");
}

WeightedVector::WeightedVector(std::map<LatticePoint, Rational> magnitudes) : magnitudes_(std::move(magnitudes)) {
  if (magnitudes_.empty()) throw Error("weighted vector must be nonzero");
  const std::size_t r = magnitudes_.begin()->first.rank();
  for (const auto& [a, m] : magnitudes_) {
    if (a.rank() != r) throw Error("weighted vector support points have different ranks");
    if (m <= 0) throw Error("weighted vector magnitudes must be strictly positive");
  }
}

WeightedVector WeightedVector::unit(const PointSet& support) {
  std::map<LatticePoint, Rational> m;
  for (const auto& a : support) m.emplace(a, Rational(1));
  return WeightedVector(std::move(m));
}

PointSet WeightedVector::support() const {
  std::vector<LatticePoint> pts;
  for (const auto& [a, m] : magnitudes_) pts.push_back(a);
  return PointSet(std::move(pts));
}

std::size_t WeightedVector::rank() const { return magnitudes_.empty() ? 0 : magnitudes_.begin()->first.rank(); }

Pair::Pair(WeightedVector v_, WeightedVector w_, StabilityProblem problem_)
    : v(std::move(v_)), w(std::move(w_)), problem(std::move(problem_)) {
  if (v.magnitudes().empty() || w.magnitudes().empty()) throw Error("pair vectors must be nonzero");
  if (v.rank() != problem.rank() || w.rank() != problem.rank())
    throw Error("pair supports do not match the problem rank");
}

Integer weight(const OnePS& u, const WeightedVector& v, const StabilityProblem& problem) {
  problem.require_admissible(u);
  return min_functional(v.support(), u);
}

Verdict t_semistable(const Pair& p) {
  const auto& ctx = p.problem.context();
  const PointSet wsupp = p.w.support();
  for (const auto& a : p.v.support()) {
    if (contains_point(wsupp, a, ctx)) continue;
    OnePS u = clear_denominators(separating_functional(wsupp, a, ctx));
    if (futaki_gen(u, p) <= 0) throw Error("internal: separating functional failed to destabilize");
    return Verdict{Status::Unstable, std::move(u)};
  }
  return Verdict{Status::Semistable, std::nullopt};
}

int degree_of(const WeightedVector& v, const StabilityProblem& problem) {
  const PointSet supp = v.support();
  for (int k = 1; k <= kDegreeSearchLimit; ++k)
    if (hull_contains(scale(problem.reference(), k), supp, problem.context())) return k;
  throw Error("degree_of: search limit exceeded");
}

Pair perturb(const Pair& p, int m, int q) {
  if (m < 1) throw Error("perturb: exponent m must be at least 1");
  if (q < 1) throw Error("perturb: degree q must be at least 1");
  PointSet vside = minkowski_sum(scale(p.problem.reference(), q), scale(p.v.support(), m));
  PointSet wside = scale(p.w.support(), m + 1);
  return Pair(WeightedVector::unit(vside), WeightedVector::unit(wside), p.problem);
}

StableVerdict stable(const Pair& p, int m_max) {
  if (m_max < 1) throw Error("stable: m_max must be at least 1");
  Verdict base = t_semistable(p);
  if (!base.semistable()) return {StableVerdict::Kind::UnstableBase, 0, base.witness};
  const int q = degree_of(p.v, p.problem);
  for (int m = 1; m <= m_max; ++m)
    if (t_semistable(perturb(p, m, q)).semistable()) return {StableVerdict::Kind::Stable, m, std::nullopt};
  return {StableVerdict::Kind::NotStableUpTo, m_max, std::nullopt};
}

Integer futaki_gen(const OnePS& u, const Pair& p) {
  return weight(u, p.w, p.problem) - weight(u, p.v, p.problem);
}

RelativeInvariant relative_invariant(const Pair& p, const LatticePoint& chi) {
  const PointSet vsupp = p.v.support();
  if (!vsupp.contains(chi)) throw Error("relative_invariant: chi is not in the support of v");
  if (!t_semistable(p).semistable()) throw Error("relative_invariant: pair is not semistable");

  const PointSet wsupp = p.w.support();
  const auto dirs = rational_constraints(p.problem);
  // A single support point congruent to chi gives a degree one invariant.
  for (const auto& b : wsupp) {
    if (linalg::in_span(dirs, difference(chi, b))) return RelativeInvariant{1, {{b, 1}}};
  }

  auto cc = convex_combination(wsupp, chi.to_rational(), p.problem.context());
  if (!cc) throw Error("relative_invariant: containment certificate missing");
  Integer d = 1;
  for (const auto& lam : cc->weights) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), lam.get_den_mpz_t());
  RelativeInvariant inv{d, {}};
  for (std::size_t i = 0; i < wsupp.size(); ++i) {
    const Rational& lam = cc->weights[i];
    if (lam == 0) continue;
    Rational n = lam * d;
    inv.exponents.emplace(wsupp[i], n.get_num());
  }
  return inv;
}

bool verify_relative_invariant(const Pair& p, const LatticePoint& chi, const RelativeInvariant& inv) {
  if (inv.degree <= 0) return false;
  const PointSet wsupp = p.w.support();
  Integer total = 0;
  LatticePoint sum = LatticePoint::zero(p.problem.rank());
  for (const auto& [b, n] : inv.exponents) {
    if (n < 0 || !wsupp.contains(b)) return false;
    total += n;
    sum += n * b;
  }
  if (total != inv.degree) return false;
  return linalg::in_span(rational_constraints(p.problem), difference(sum, inv.degree * chi));
}

}  // namespace pairstab

#pragma once

// Semistability and stability of pairs (v, w) of vectors in torus
// representations, decided on weight polytopes.
//
// With respect to a one-parameter subgroup u, the weight of v is
//   w_u(v) = min { <u, a> : a in supp(v) },
// and (v, w) is T-semistable iff w_u(w) <= w_u(v) for every u, equivalently
// N(v) is contained in N(w). A pair is stable when some perturbation
// (I^q (x) v^m, w^{m+1}) is semistable, q being the degree of v.

#include <pairstab/polytope.hpp>

#include <map>
#include <optional>

namespace pairstab {

/// Torus data shared by both sides of a pair: the ambient rank, covectors
/// that every admissible one-parameter subgroup must annihilate, and the
/// reference polytope Q (the weight polytope of the identity).
class StabilityProblem {
 public:
  /// Validates that 0 is a strict interior point of Q modulo the constraints.
  StabilityProblem(std::size_t rank, std::vector<LatticePoint> constraints, PointSet q);

  /// SL(N+1) convention: Q = {e_0, ..., e_N}, constraint (1, ..., 1).
  static StabilityProblem special_linear(std::size_t n_plus_one);
  /// Free lattice with Q = {+-e_i}.
  static StabilityProblem cross_polytope(std::size_t rank);

  std::size_t rank() const { return rank_; }
  const std::vector<LatticePoint>& constraints() const { return constraints_; }
  const PointSet& reference() const { return q_; }
  const ContainmentContext& context() const { return ctx_; }

  bool admissible(const OnePS& u) const;
  void require_admissible(const OnePS& u) const;

  friend bool operator==(const StabilityProblem& a, const StabilityProblem& b) {
    return a.rank_ == b.rank_ && a.constraints_ == b.constraints_ && a.q_ == b.q_;
  }

 private:
  std::size_t rank_;
  std::vector<LatticePoint> constraints_;
  PointSet q_;
  ContainmentContext ctx_;
};

/// A vector through its weight decomposition: the support with the squared
/// magnitudes |v_a|^2 of the weight components.
class WeightedVector {
 public:
  WeightedVector() = default;
  explicit WeightedVector(std::map<LatticePoint, Rational> magnitudes);
  /// Unit magnitudes on every support point.
  static WeightedVector unit(const PointSet& support);

  PointSet support() const;
  std::size_t rank() const;
  const std::map<LatticePoint, Rational>& magnitudes() const { return magnitudes_; }

  friend bool operator==(const WeightedVector&, const WeightedVector&) = default;

 private:
  std::map<LatticePoint, Rational> magnitudes_;
};

struct Pair {
  WeightedVector v;
  WeightedVector w;
  StabilityProblem problem;

  Pair(WeightedVector v, WeightedVector w, StabilityProblem problem);

  friend bool operator==(const Pair&, const Pair&) = default;
};

enum class Status { Semistable, Unstable };

struct Verdict {
  Status status = Status::Semistable;
  std::optional<OnePS> witness;  // set iff Unstable

  bool semistable() const { return status == Status::Semistable; }
};

struct StableVerdict {
  enum class Kind { Stable, NotStableUpTo, UnstableBase };
  Kind kind = Kind::NotStableUpTo;
  int exponent = 0;              // m for Stable, m_max for NotStableUpTo
  std::optional<OnePS> witness;  // UnstableBase only
};

Integer weight(const OnePS& u, const WeightedVector& v, const StabilityProblem& problem);

/// Hull criterion at the problem's torus, with a destabilizing witness on failure.
Verdict t_semistable(const Pair& p);

/// Smallest k >= 1 with supp(v) inside k Q.
int degree_of(const WeightedVector& v, const StabilityProblem& problem);

/// (I^q (x) v^m, w^{m+1}) with hull-generating supports and unit magnitudes.
Pair perturb(const Pair& p, int m, int q);

StableVerdict stable(const Pair& p, int m_max);

/// F_gen(u) = w_u(w) - w_u(v).
Integer futaki_gen(const OnePS& u, const Pair& p);

/// A T-eigen monomial prod w_b^{n_b} of degree d and character d chi.
struct RelativeInvariant {
  Integer degree;
  std::map<LatticePoint, Integer> exponents;  // only positive exponents
};

RelativeInvariant relative_invariant(const Pair& p, const LatticePoint& chi);

/// True iff sum n_b b - d chi lies in the span of the constraint directions.
bool verify_relative_invariant(const Pair& p, const LatticePoint& chi, const RelativeInvariant& inv);

}  // namespace pairstab

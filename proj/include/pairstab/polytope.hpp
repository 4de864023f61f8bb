#pragma once

// Exact convex geometry on finite lattice point sets (V-representation only).
// Every hull question is answered by an exact rational LP or, for separation,
// by an exact minimum-norm-point computation.

#include <pairstab/lattice.hpp>

#include <initializer_list>
#include <optional>
#include <vector>

namespace pairstab {

/// Finite, deduplicated set of lattice points of a common rank. Stored sorted.
class PointSet {
 public:
  explicit PointSet(std::size_t rank = 0) : rank_(rank) {}
  explicit PointSet(std::vector<LatticePoint> points);
  PointSet(std::initializer_list<LatticePoint> points) : PointSet(std::vector<LatticePoint>(points)) {}

  std::size_t rank() const { return rank_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const LatticePoint& operator[](std::size_t i) const { return points_[i]; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }
  const std::vector<LatticePoint>& points() const { return points_; }
  bool contains(const LatticePoint& p) const;

  /// Points of this set that are not in `other`.
  PointSet minus(const PointSet& other) const;
  PointSet with(const LatticePoint& p) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<LatticePoint> points_;
};

/// Directions quotiented out by containment tests: conv(A) + span(directions).
struct ContainmentContext {
  std::vector<LatticePoint> mod_directions;

  /// Throws unless all directions have the given rank and are independent.
  void validate(std::size_t rank) const;
};

bool contains_point(const PointSet& a, const RationalVector& x, const ContainmentContext& ctx = {});
bool contains_point(const PointSet& a, const LatticePoint& x, const ContainmentContext& ctx = {});

/// conv(b) within conv(a) + span(ctx). Vacuously true for empty b.
bool hull_contains(const PointSet& a, const PointSet& b, const ContainmentContext& ctx = {});

/// Certificate that x lies in conv(a) + span(ctx): x = sum weights_i a_i + sum multipliers_j d_j.
struct ConvexCombination {
  RationalVector weights;      // one per point of a, nonnegative, sum 1
  RationalVector multipliers;  // one per mod direction
};
std::optional<ConvexCombination> convex_combination(const PointSet& a, const RationalVector& x,
                                                    const ContainmentContext& ctx = {});

/// Rational g with <g, x> < min_a <g, a> and <g, d> = 0 for every mod
/// direction d. g is the minimum-norm point of conv(a - x) projected away
/// from the mod directions. Throws if x is contained.
RationalFunctional separating_functional(const PointSet& a, const RationalVector& x,
                                         const ContainmentContext& ctx = {});
RationalFunctional separating_functional(const PointSet& a, const LatticePoint& x,
                                         const ContainmentContext& ctx = {});

PointSet minkowski_sum(const PointSet& a, const PointSet& b);
PointSet scale(const PointSet& a, const Integer& m);

Integer min_functional(const PointSet& a, const OnePS& u);

/// x in the relative interior of conv(a) + span(ctx).
bool interior_contains(const PointSet& a, const RationalVector& x, const ContainmentContext& ctx = {});
bool interior_contains(const PointSet& a, const LatticePoint& x, const ContainmentContext& ctx = {});

/// Dimension of the affine hull of conv(a) + span(directions).
std::size_t affine_dimension(const PointSet& a, const ContainmentContext& ctx = {});

struct MinNormPoint {
  RationalVector point;
  RationalVector weights;  // barycentric, one per input point
};

/// Wolfe's algorithm in exact arithmetic: the point of conv(points) closest to
/// the origin.
MinNormPoint min_norm_point(const std::vector<RationalVector>& points);

}  // namespace pairstab

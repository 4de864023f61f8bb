#pragma once

// Pairs of binary forms under SL(2). A pair (f, g) of degrees (e, d) is
// semistable iff e <= d and ord_p(g) - ord_p(f) <= (d - e)/2 at every point
// p of P^1. An independent check runs the torus hull criterion at the maximal
// tori fixing each critical point.

#include <pairstab/pairs.hpp>

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

namespace pairstab {

/// A rational point [p:q] of P^1; gcd(p, q) = 1 with q > 0, or [1:0].
class ProjectivePoint {
 public:
  ProjectivePoint(Integer p, Integer q);
  static ProjectivePoint infinity() { return ProjectivePoint(1, 0); }

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }
  std::string str() const;

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
  friend bool operator<(const ProjectivePoint& a, const ProjectivePoint& b);

 private:
  Integer p_, q_;
};

std::ostream& operator<<(std::ostream& os, const ProjectivePoint& pt);

using IntMatrix2 = std::array<std::array<Integer, 2>, 2>;

/// scale * prod over roots [p:q] of (q x - p y)^mult.
class BinaryForm {
 public:
  BinaryForm(std::map<ProjectivePoint, int> roots, Rational scale = 1);
  static BinaryForm constant(Rational c = 1) { return BinaryForm({}, std::move(c)); }

  int degree() const { return degree_; }
  const std::map<ProjectivePoint, int>& roots() const { return roots_; }
  const Rational& scale() const { return scale_; }
  int ord(const ProjectivePoint& pt) const;

  /// Coefficients c_i of x^i y^{degree - i}, i = 0..degree.
  std::vector<Rational> coefficients() const;

  /// Parses "1" (constant) or root lists such as "[0:1]^2 [1:0] [-1:2]".
  static BinaryForm parse(const std::string& text);
  std::string str() const;

  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

 private:
  std::map<ProjectivePoint, int> roots_;
  Rational scale_;
  int degree_ = 0;
};

struct BinaryVerdict {
  Status status = Status::Semistable;
  std::optional<ProjectivePoint> point;  // a point violating the order bound
  std::optional<OnePS> witness;          // torus oracle only: destabilizing u at that point's torus

  bool semistable() const { return status == Status::Semistable; }
};

BinaryVerdict semistable_bf(const BinaryForm& f, const BinaryForm& g);

/// True iff no pair of degrees (e, d) can be semistable because e = d - 1.
bool impossible_degree_check(int e, int d);

/// (M.f)(z) = f(M^{-1} z); roots move by r -> M r.
BinaryForm mobius_act(const IntMatrix2& m, const BinaryForm& f);

/// Hull criterion for the diagonal torus on monomial weights {-deg, ..., deg}.
Verdict diagonal_torus_verdict(const BinaryForm& f, const BinaryForm& g);

BinaryVerdict torus_oracle_bf(const BinaryForm& f, const BinaryForm& g);

}  // namespace pairstab

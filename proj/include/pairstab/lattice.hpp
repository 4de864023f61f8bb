#pragma once

// Character lattice M = Z^rank, one-parameter subgroup lattice N = Z^rank and
// the pairing between them. Quotient conventions (for example the SL
// character lattice Z^{N+1}/Z(1,...,1)) are expressed by constraining
// one-parameter subgroups, never by quotienting points.

#include <pairstab/arith.hpp>

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace pairstab {

/// A character a in M.
class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  LatticePoint(std::initializer_list<long> coords);

  static LatticePoint zero(std::size_t rank) { return LatticePoint(std::vector<Integer>(rank, 0)); }

  std::size_t rank() const { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Integer> coords() const { return coords_; }

  LatticePoint& operator+=(const LatticePoint& other);
  LatticePoint& operator-=(const LatticePoint& other);
  friend LatticePoint operator+(LatticePoint a, const LatticePoint& b) { return a += b; }
  friend LatticePoint operator-(LatticePoint a, const LatticePoint& b) { return a -= b; }
  friend LatticePoint operator*(const Integer& k, const LatticePoint& a);

  RationalVector to_rational() const;

  friend bool operator==(const LatticePoint& a, const LatticePoint& b) { return a.coords_ == b.coords_; }
  friend std::strong_ordering operator<=>(const LatticePoint& a, const LatticePoint& b);

 private:
  std::vector<Integer> coords_;
};

/// An algebraic one-parameter subgroup u in N, t -> (t^{u_0}, ..., t^{u_r}).
class OnePS {
 public:
  OnePS() = default;
  explicit OnePS(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  OnePS(std::initializer_list<long> coords);

  static OnePS zero(std::size_t rank) { return OnePS(std::vector<Integer>(rank, 0)); }

  std::size_t rank() const { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Integer> coords() const { return coords_; }
  bool is_zero() const;

  OnePS operator-() const;

  friend bool operator==(const OnePS& a, const OnePS& b) { return a.coords_ == b.coords_; }

 private:
  std::vector<Integer> coords_;
};

/// A rational linear functional on M_R.
struct RationalFunctional {
  RationalVector coords;
};

/// <u, m> = sum u_i m_i.
Integer pair(const OnePS& u, const LatticePoint& m);
Rational pair(const RationalFunctional& g, const LatticePoint& m);
Rational pair(const RationalFunctional& g, const RationalVector& x);

/// Smallest positive multiple of g with integer coordinates (a primitive vector).
OnePS clear_denominators(const RationalFunctional& g);

/// Primitive integer vector parallel to a nonzero rational vector, same direction.
std::vector<Integer> primitive_direction(const RationalVector& x);

std::ostream& operator<<(std::ostream& os, const LatticePoint& a);
std::ostream& operator<<(std::ostream& os, const OnePS& u);

}  // namespace pairstab

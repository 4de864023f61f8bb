#pragma once

// Dense exact linear algebra over Q. Matrices are small (a few dozen rows),
// so everything is plain Gauss-Jordan elimination.

#include <pairstab/arith.hpp>

#include <optional>
#include <vector>

namespace pairstab::linalg {

using Matrix = std::vector<RationalVector>;  // row-major

std::size_t rank(Matrix rows);

/// Basis of {x : rows * x = 0}; `cols` is needed when `rows` is empty.
std::vector<RationalVector> nullspace(Matrix rows, std::size_t cols);

/// Some solution of A x = b, or nullopt when the system is inconsistent.
std::optional<RationalVector> solve(Matrix a, RationalVector b);

/// True iff x lies in the linear span of `vectors`.
bool in_span(const std::vector<RationalVector>& vectors, const RationalVector& x);

Rational dot(const RationalVector& a, const RationalVector& b);

/// Orthogonal projection onto the complement of span(directions). The
/// directions must be linearly independent.
class ComplementProjector {
 public:
  explicit ComplementProjector(std::vector<RationalVector> directions);
  RationalVector operator()(const RationalVector& x) const;

 private:
  std::vector<RationalVector> basis_;  // Gram-Schmidt, not normalized
  std::vector<Rational> norms_;
};

}  // namespace pairstab::linalg

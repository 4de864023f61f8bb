#pragma once

// Exact rational linear programming: two-phase primal simplex on a dense
// tableau with Bland's anticycling rule.

#include <pairstab/arith.hpp>

#include <vector>

namespace pairstab::lp {

enum class Sense { LessEqual, Equal, GreaterEqual };

struct Constraint {
  RationalVector coeffs;
  Sense sense = Sense::Equal;
  Rational rhs = 0;
};

/// maximize objective . x subject to the rows; variables are nonnegative
/// unless flagged free.
struct Program {
  std::size_t num_vars = 0;
  std::vector<bool> free_var;
  std::vector<Constraint> rows;
  RationalVector objective;  // empty means pure feasibility

  explicit Program(std::size_t n) : num_vars(n), free_var(n, false) {}
  void add(RationalVector coeffs, Sense sense, Rational rhs);
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
  Status status = Status::Infeasible;
  RationalVector x;  // basic solution in the original variables
  Rational value = 0;
};

Result solve(const Program& program);

}  // namespace pairstab::lp

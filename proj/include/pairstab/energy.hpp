#pragma once

// The energy of a pair along the torus,
//   p_vw(sigma) = log ||sigma.w||^2 - log ||sigma.v||^2,
// with weight-orthonormal norms, so ||sigma.v||^2 = sum_a |v_a|^2 |a(sigma)|^2.
// This is the only floating-point module; verdicts stay exact.

#include <pairstab/pairs.hpp>

#include <optional>
#include <vector>

namespace pairstab {

/// Diagonal torus element with |t_i| = exp(log_moduli[i]).
struct TorusElement {
  std::vector<double> log_moduli;

  static TorusElement identity(std::size_t rank) { return {std::vector<double>(rank, 0.0)}; }
  /// lambda^u(t): log moduli (log t) u.
  static TorusElement along(const OnePS& u, double t);
};

/// log ||sigma.v||^2, evaluated with log-sum-exp.
double log_norm_squared(const WeightedVector& v, const TorusElement& s);

double energy_at(const Pair& p, const TorusElement& s);

/// Energy at lambda^u(t); t in (0, 1].
double energy_along(const Pair& p, const OnePS& u, double t);

/// Slope of t -> energy_along(p, u, t) against log t^2 as t -> 0, by finite
/// differences at t = 1e-4, 1e-6, 1e-8 (the last pair is reported).
double asymptotic_slope(const Pair& p, const OnePS& u);

/// log tan^2 of the Fubini-Study distance between sigma.[(v,w)] and sigma.[(v,0)].
double kempf_ness_distance(const Pair& p, const TorusElement& s);

struct InfimumOptions {
  int max_sweeps = 400;
  double initial_step = 1.0;
  double min_step = 1e-10;
  double ray_length = 50.0;
};

struct InfimumEstimate {
  bool unbounded = false;        // exact: some admissible u has F_gen(u) > 0
  std::optional<OnePS> witness;  // that u, when unbounded
  double upper_bound = 0.0;      // finite upper bound on the infimum otherwise
  TorusElement argmin;
};

InfimumEstimate infimum_estimate(const Pair& p, const InfimumOptions& options = {});

/// (m+1) w_u(w) <= q w_u(I) + m w_u(v), with w_u(I) = min over Q.
bool properness_slope_check(const Pair& p, int m, int q, const OnePS& u);

}  // namespace pairstab

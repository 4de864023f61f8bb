#pragma once

// Degree bookkeeping for the pair (R^{deg Delta}, Delta^{deg R}) attached to
// a projective variety X^n in P^N of degree d: R is the X-resultant (Chow
// form) and Delta the X-hyperdiscriminant. Weight data for R and Delta are
// supplied by the caller.

#include <pairstab/pairs.hpp>

#include <optional>

namespace pairstab {

struct VarietyDatum {
  int n = 1;      // dimension
  int d = 2;      // degree
  Rational mu;    // average scalar curvature
  int N = 2;      // ambient projective dimension
};

struct DegreeReport {
  Integer deg_r;                       // d (n + 1)
  Integer deg_delta;                   // n (n + 1) d - d mu
  Integer r;                           // deg_r * deg_delta
  std::vector<Integer> lambda;         // (r/(n+1) x (n+1), 0 ...), length N + 1
  std::vector<Integer> mu_partition;   // (r/n x n, 0 ...), length N + 1
};

DegreeReport degrees(const VarietyDatum& vd);

/// Genus of a smooth plane curve of degree d.
int plane_curve_genus(int d);

/// mu = (2 - 2g)/d for a curve of genus g.
Rational curve_mu(int d, int genus);

/// Throws unless vd describes a curve (n = 1) whose mu matches genus g.
void check_mu_against_genus(const VarietyDatum& vd, int genus);

/// (R^{deg Delta}, Delta^{deg R}) at the level of weight polytopes.
Pair variety_pair(const WeightedVector& r_data, const WeightedVector& delta_data, const DegreeReport& report,
                  const StabilityProblem& problem);

/// (m+1)(w_u(Delta^{deg R}) - w_u(R^{deg Delta})) <= deg_e w_u(I) - w_u(R^{deg Delta}).
bool mabuchi_weight_inequality(const WeightedVector& r_data, const WeightedVector& delta_data,
                               const DegreeReport& report, int m, const Integer& deg_e, const OnePS& u,
                               const StabilityProblem& problem);

}  // namespace pairstab

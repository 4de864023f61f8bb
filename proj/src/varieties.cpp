#include <pairstab/varieties.hpp>

namespace pairstab {

DegreeReport degrees(const VarietyDatum& vd) {
  if (vd.n < 1) throw Error("variety dimension n must be at least 1");
  if (vd.d < 2) throw Error("variety degree d must be at least 2");
  if (vd.N < vd.n) throw Error("ambient dimension N must be at least n");
  const Rational delta = Rational(vd.n * (vd.n + 1) * vd.d) - vd.d * vd.mu;
  if (delta.get_den() != 1 || delta <= 0)
    throw Error("hyperdiscriminant degree n(n+1)d - d mu = " + format_rational(delta) +
                " is not a positive integer; mu is inconsistent");
  DegreeReport rep;
  rep.deg_r = vd.d * (vd.n + 1);
  rep.deg_delta = delta.get_num();
  rep.r = rep.deg_r * rep.deg_delta;
  if (rep.r % (vd.n + 1) != 0 || rep.r % vd.n != 0)
    throw Error("common degree r is not divisible by n and n+1");
  rep.lambda.assign(vd.N + 1, 0);
  rep.mu_partition.assign(vd.N + 1, 0);
  for (int i = 0; i <= vd.n; ++i) rep.lambda[i] = rep.r / (vd.n + 1);
  for (int i = 0; i < vd.n; ++i) rep.mu_partition[i] = rep.r / vd.n;
  return rep;
}

int plane_curve_genus(int d) {
  if (d < 1) throw Error("curve degree must be positive");
  return (d - 1) * (d - 2) / 2;
}

Rational curve_mu(int d, int genus) {
  Rational mu(2 - 2 * genus, d);
  mu.canonicalize();
  return mu;
}

void check_mu_against_genus(const VarietyDatum& vd, int genus) {
  if (vd.n != 1) throw Error("genus check applies to curves only");
  const Rational expected = curve_mu(vd.d, genus);
  if (vd.mu != expected)
    throw Error("mu = " + format_rational(vd.mu) + " is inconsistent with genus " + std::to_string(genus) +
                " (expected " + format_rational(expected) + ")");
}

Pair variety_pair(const WeightedVector& r_data, const WeightedVector& delta_data, const DegreeReport& report,
                  const StabilityProblem& problem) {
  if (r_data.rank() != problem.rank() || delta_data.rank() != problem.rank())
    throw Error("variety_pair: weight data rank does not match the problem");
  return Pair(WeightedVector::unit(scale(r_data.support(), report.deg_delta)),
              WeightedVector::unit(scale(delta_data.support(), report.deg_r)), problem);
}

bool mabuchi_weight_inequality(const WeightedVector& r_data, const WeightedVector& delta_data,
                               const DegreeReport& report, int m, const Integer& deg_e, const OnePS& u,
                               const StabilityProblem& problem) {
  problem.require_admissible(u);
  const Integer w_delta = report.deg_r * weight(u, delta_data, problem);
  const Integer w_r = report.deg_delta * weight(u, r_data, problem);
  const Integer w_id = min_functional(problem.reference(), u);
  const Integer lhs = (m + 1) * (w_delta - w_r);
  const Integer rhs = deg_e * w_id - w_r;
  return lhs <= rhs;
}

}  // namespace pairstab

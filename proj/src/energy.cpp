#include <pairstab/energy.hpp>

#include <pairstab/linalg.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace pairstab {

namespace {

constexpr double kConstraintTolerance = 1e-9;

void require_admissible(const Pair& p, const TorusElement& s) {
  if (s.log_moduli.size() != p.problem.rank()) throw Error("torus element has the wrong rank");
  for (double x : s.log_moduli)
    if (!std::isfinite(x)) throw Error("torus element has non-finite entries");
  for (const auto& c : p.problem.constraints()) {
    double dot = 0, scale = 0;
    for (std::size_t i = 0; i < c.rank(); ++i) {
      double term = c[i].get_d() * s.log_moduli[i];
      dot += term;
      scale += std::abs(term);
    }
    if (std::abs(dot) > kConstraintTolerance * std::max(1.0, scale))
      throw Error("torus element does not annihilate the constraints");
  }
}

std::vector<std::vector<double>> admissible_basis(const StabilityProblem& problem) {
  linalg::Matrix rows;
  for (const auto& c : problem.constraints()) rows.push_back(c.to_rational());
  std::vector<std::vector<double>> out;
  for (const auto& v : linalg::nullspace(std::move(rows), problem.rank())) {
    std::vector<double> d;
    double norm = 0;
    for (const auto& x : v) {
      d.push_back(x.get_d());
      norm += d.back() * d.back();
    }
    norm = std::sqrt(norm);
    for (auto& x : d) x /= norm;
    out.push_back(std::move(d));
  }
  return out;
}

TorusElement shifted(const TorusElement& s, const std::vector<double>& dir, double step) {
  TorusElement out = s;
  for (std::size_t i = 0; i < dir.size(); ++i) out.log_moduli[i] += step * dir[i];
  return out;
}

}  // namespace

TorusElement TorusElement::along(const OnePS& u, double t) {
  TorusElement s;
  const double lt = std::log(t);
  for (const auto& c : u.coords()) s.log_moduli.push_back(lt * c.get_d());
  return s;
}

double log_norm_squared(const WeightedVector& v, const TorusElement& s) {
  std::vector<double> terms;
  terms.reserve(v.magnitudes().size());
  for (const auto& [a, mag] : v.magnitudes()) {
    double e = std::log(mag.get_d());
    for (std::size_t i = 0; i < a.rank(); ++i) e += 2.0 * s.log_moduli[i] * a[i].get_d();
    terms.push_back(e);
  }
  const double top = *std::max_element(terms.begin(), terms.end());
  double sum = 0;
  for (double e : terms) sum += std::exp(e - top);
  return top + std::log(sum);
}

double energy_at(const Pair& p, const TorusElement& s) {
  require_admissible(p, s);
  return log_norm_squared(p.w, s) - log_norm_squared(p.v, s);
}

double energy_along(const Pair& p, const OnePS& u, double t) {
  if (!(t > 0.0 && t <= 1.0)) throw Error("energy_along: t must lie in (0, 1]");
  p.problem.require_admissible(u);
  return energy_at(p, TorusElement::along(u, t));
}

double asymptotic_slope(const Pair& p, const OnePS& u) {
  p.problem.require_admissible(u);
  const double ts[] = {1e-4, 1e-6, 1e-8};
  double slope = 0;
  for (int k = 0; k + 1 < 3; ++k) {
    const double e0 = energy_along(p, u, ts[k]), e1 = energy_along(p, u, ts[k + 1]);
    slope = (e1 - e0) / (2.0 * std::log(ts[k + 1]) - 2.0 * std::log(ts[k]));
  }
  return slope;
}

double kempf_ness_distance(const Pair& p, const TorusElement& s) {
  require_admissible(p, s);
  const double nv = log_norm_squared(p.v, s), nw = log_norm_squared(p.w, s);
  const double top = std::max(nv, nw);
  const double v_norm = std::exp(0.5 * (nv - top)), w_norm = std::exp(0.5 * (nw - top));
  // d = arccos(|v| / sqrt(|v|^2 + |w|^2)). tan loses relative precision
  // near pi/2, so past pi/4 use tan d = 1 / tan(pi/2 - d).
  if (w_norm <= v_norm) return 2.0 * std::log(std::tan(std::atan2(w_norm, v_norm)));
  return -2.0 * std::log(std::tan(std::atan2(v_norm, w_norm)));
}

InfimumEstimate infimum_estimate(const Pair& p, const InfimumOptions& options) {
  InfimumEstimate est;
  Verdict verdict = t_semistable(p);
  if (!verdict.semistable()) {
    est.unbounded = true;
    est.witness = verdict.witness;
    est.upper_bound = -std::numeric_limits<double>::infinity();
    return est;
  }

  const auto basis = admissible_basis(p.problem);
  TorusElement best = TorusElement::identity(p.problem.rank());
  double best_value = energy_at(p, best);

  // Ray probes: the energy is bounded below, but can decrease to its
  // asymptotic value along a ray.
  for (const auto& dir : basis) {
    for (double sign : {1.0, -1.0}) {
      for (double len = 1.0; len <= options.ray_length; len *= 2.0) {
        TorusElement cand = shifted(TorusElement::identity(p.problem.rank()), dir, sign * len);
        double val = energy_at(p, cand);
        if (val < best_value) {
          best_value = val;
          best = cand;
        }
      }
    }
  }

  double step = options.initial_step;
  for (int sweep = 0; sweep < options.max_sweeps && step > options.min_step; ++sweep) {
    bool improved = false;
    for (const auto& dir : basis) {
      for (double sign : {1.0, -1.0}) {
        TorusElement cand = shifted(best, dir, sign * step);
        double val = energy_at(p, cand);
        if (val < best_value) {
          best_value = val;
          best = std::move(cand);
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  est.upper_bound = best_value;
  est.argmin = std::move(best);
  return est;
}

bool properness_slope_check(const Pair& p, int m, int q, const OnePS& u) {
  p.problem.require_admissible(u);
  const Integer lhs = (m + 1) * weight(u, p.w, p.problem);
  const Integer rhs = q * min_functional(p.problem.reference(), u) + m * weight(u, p.v, p.problem);
  return lhs <= rhs;
}

}  // namespace pairstab

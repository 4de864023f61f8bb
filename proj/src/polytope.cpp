#include <pairstab/polytope.hpp>

#include <pairstab/linalg.hpp>
#include <pairstab/lp.hpp>

#include <algorithm>

namespace pairstab {

namespace {

void require_rank(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got)
    throw Error(std::string(what) + ": dimension mismatch (" + std::to_string(expected) + " vs " +
                std::to_string(got) + ")");
}

void require_nonempty(const PointSet& a, const char* what) {
  if (a.empty()) throw Error(std::string(what) + ": empty point set");
}

// Variables: one weight per point of a, one free multiplier per direction.
lp::Program containment_program(const PointSet& a, const RationalVector& x, const ContainmentContext& ctx,
                                std::size_t extra_vars) {
  const std::size_t na = a.size(), nd = ctx.mod_directions.size();
  lp::Program prog(na + nd + extra_vars);
  for (std::size_t j = 0; j < nd; ++j) prog.free_var[na + j] = true;
  for (std::size_t k = 0; k < a.rank(); ++k) {
    RationalVector row(prog.num_vars, 0);
    for (std::size_t i = 0; i < na; ++i) row[i] = a[i][k];
    for (std::size_t j = 0; j < nd; ++j) row[na + j] = ctx.mod_directions[j][k];
    prog.add(std::move(row), lp::Sense::Equal, x[k]);
  }
  RationalVector ones(prog.num_vars, 0);
  for (std::size_t i = 0; i < na; ++i) ones[i] = 1;
  prog.add(std::move(ones), lp::Sense::Equal, 1);
  return prog;
}

void check_inputs(const PointSet& a, std::size_t x_rank, const ContainmentContext& ctx, const char* what) {
  require_nonempty(a, what);
  require_rank(a.rank(), x_rank, what);
  ctx.validate(a.rank());
}

}  // namespace

PointSet::PointSet(std::vector<LatticePoint> points) : points_(std::move(points)) {
  rank_ = points_.empty() ? 0 : points_.front().rank();
  for (const auto& p : points_) require_rank(rank_, p.rank(), "PointSet");
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool PointSet::contains(const LatticePoint& p) const { return std::binary_search(points_.begin(), points_.end(), p); }

PointSet PointSet::minus(const PointSet& other) const {
  std::vector<LatticePoint> out;
  for (const auto& p : points_)
    if (!other.contains(p)) out.push_back(p);
  if (out.empty()) return PointSet(rank_);
  return PointSet(std::move(out));
}

PointSet PointSet::with(const LatticePoint& p) const {
  auto pts = points_;
  pts.push_back(p);
  return PointSet(std::move(pts));
}

void ContainmentContext::validate(std::size_t rank) const {
  for (const auto& d : mod_directions) require_rank(rank, d.rank(), "mod direction");
  linalg::Matrix rows;
  for (const auto& d : mod_directions) rows.push_back(d.to_rational());
  if (linalg::rank(rows) != rows.size()) throw Error("mod directions are linearly dependent");
}

std::optional<ConvexCombination> convex_combination(const PointSet& a, const RationalVector& x,
                                                    const ContainmentContext& ctx) {
  check_inputs(a, x.size(), ctx, "contains_point");
  auto res = lp::solve(containment_program(a, x, ctx, 0));
  if (res.status != lp::Status::Optimal) return std::nullopt;
  ConvexCombination cc;
  cc.weights.assign(res.x.begin(), res.x.begin() + static_cast<std::ptrdiff_t>(a.size()));
  cc.multipliers.assign(res.x.begin() + static_cast<std::ptrdiff_t>(a.size()), res.x.end());
  return cc;
}

bool contains_point(const PointSet& a, const RationalVector& x, const ContainmentContext& ctx) {
  return convex_combination(a, x, ctx).has_value();
}

bool contains_point(const PointSet& a, const LatticePoint& x, const ContainmentContext& ctx) {
  return contains_point(a, x.to_rational(), ctx);
}

bool hull_contains(const PointSet& a, const PointSet& b, const ContainmentContext& ctx) {
  require_nonempty(a, "hull_contains");
  if (b.empty()) return true;
  require_rank(a.rank(), b.rank(), "hull_contains");
  for (const auto& p : b)
    if (!contains_point(a, p, ctx)) return false;
  return true;
}

MinNormPoint min_norm_point(const std::vector<RationalVector>& points) {
  if (points.empty()) throw Error("min_norm_point: no points");
  const std::size_t n = points.size(), dim = points.front().size();

  auto combine = [&](const std::vector<std::size_t>& s, const RationalVector& lam) {
    RationalVector x(dim, 0);
    for (std::size_t k = 0; k < s.size(); ++k)
      for (std::size_t i = 0; i < dim; ++i) x[i] += lam[k] * points[s[k]][i];
    return x;
  };
  // Barycentric coordinates of the point of aff(s) nearest the origin.
  auto affine_minimizer = [&](const std::vector<std::size_t>& s) {
    const std::size_t k = s.size();
    linalg::Matrix sys(k + 1, RationalVector(k + 1, 0));
    RationalVector rhs(k + 1, 0);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) sys[i][j] = linalg::dot(points[s[i]], points[s[j]]);
      sys[i][k] = -1;
      sys[k][i] = 1;
    }
    rhs[k] = 1;
    auto sol = linalg::solve(std::move(sys), std::move(rhs));
    if (!sol) throw Error("min_norm_point: affinely dependent corral");
    sol->pop_back();
    return *sol;
  };

  std::size_t start = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (linalg::dot(points[i], points[i]) < linalg::dot(points[start], points[start])) start = i;
  std::vector<std::size_t> s{start};
  RationalVector lam{1};
  RationalVector x = points[start];

  for (;;) {
    Rational xx = linalg::dot(x, x);
    if (xx == 0) break;
    std::size_t j = 0;
    Rational best = linalg::dot(x, points[0]);
    for (std::size_t i = 1; i < n; ++i) {
      Rational v = linalg::dot(x, points[i]);
      if (v < best) {
        best = v;
        j = i;
      }
    }
    if (best >= xx) break;
    if (std::find(s.begin(), s.end(), j) != s.end()) throw Error("min_norm_point: cycling");
    s.push_back(j);
    lam.push_back(0);
    for (;;) {
      RationalVector alpha = affine_minimizer(s);
      if (std::all_of(alpha.begin(), alpha.end(), [](const Rational& a) { return a > 0; })) {
        lam = std::move(alpha);
        break;
      }
      std::optional<Rational> theta;
      for (std::size_t k = 0; k < s.size(); ++k) {
        if (alpha[k] > 0) continue;
        Rational t = lam[k] / (lam[k] - alpha[k]);
        if (!theta || t < *theta) theta = t;
      }
      for (std::size_t k = 0; k < s.size(); ++k) lam[k] = (1 - *theta) * lam[k] + *theta * alpha[k];
      std::vector<std::size_t> s2;
      RationalVector lam2;
      for (std::size_t k = 0; k < s.size(); ++k) {
        if (lam[k] > 0) {
          s2.push_back(s[k]);
          lam2.push_back(lam[k]);
        }
      }
      s = std::move(s2);
      lam = std::move(lam2);
    }
    x = combine(s, lam);
  }

  MinNormPoint out;
  out.point = x;
  out.weights.assign(n, 0);
  for (std::size_t k = 0; k < s.size(); ++k) out.weights[s[k]] = lam[k];
  return out;
}

RationalFunctional separating_functional(const PointSet& a, const RationalVector& x, const ContainmentContext& ctx) {
  check_inputs(a, x.size(), ctx, "separating_functional");
  std::vector<RationalVector> dirs;
  for (const auto& d : ctx.mod_directions) dirs.push_back(d.to_rational());
  linalg::ComplementProjector project(std::move(dirs));
  std::vector<RationalVector> shifted;
  for (const auto& p : a) {
    RationalVector y = p.to_rational();
    for (std::size_t i = 0; i < y.size(); ++i) y[i] -= x[i];
    shifted.push_back(project(y));
  }
  auto mnp = min_norm_point(shifted);
  if (linalg::dot(mnp.point, mnp.point) == 0) throw Error("separating_functional: point lies in the hull");
  return RationalFunctional{std::move(mnp.point)};
}

RationalFunctional separating_functional(const PointSet& a, const LatticePoint& x, const ContainmentContext& ctx) {
  return separating_functional(a, x.to_rational(), ctx);
}

PointSet minkowski_sum(const PointSet& a, const PointSet& b) {
  if (a.empty() || b.empty()) return PointSet(std::max(a.rank(), b.rank()));
  require_rank(a.rank(), b.rank(), "minkowski_sum");
  std::vector<LatticePoint> out;
  out.reserve(a.size() * b.size());
  for (const auto& p : a)
    for (const auto& q : b) out.push_back(p + q);
  return PointSet(std::move(out));
}

PointSet scale(const PointSet& a, const Integer& m) {
  if (m <= 0) throw Error("scale: factor must be positive");
  std::vector<LatticePoint> out;
  for (const auto& p : a) out.push_back(m * p);
  if (out.empty()) return PointSet(a.rank());
  return PointSet(std::move(out));
}

Integer min_functional(const PointSet& a, const OnePS& u) {
  require_nonempty(a, "min_functional");
  Integer best = pair(u, a[0]);
  for (std::size_t i = 1; i < a.size(); ++i) {
    Integer v = pair(u, a[i]);
    if (v < best) best = v;
  }
  return best;
}

bool interior_contains(const PointSet& a, const RationalVector& x, const ContainmentContext& ctx) {
  check_inputs(a, x.size(), ctx, "interior_contains");
  // Maximize a common lower bound delta on all convex weights.
  auto prog = containment_program(a, x, ctx, 1);
  const std::size_t delta = prog.num_vars - 1;
  prog.free_var[delta] = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    RationalVector row(prog.num_vars, 0);
    row[i] = 1;
    row[delta] = -1;
    prog.add(std::move(row), lp::Sense::GreaterEqual, 0);
  }
  prog.objective.assign(prog.num_vars, 0);
  prog.objective[delta] = 1;
  auto res = lp::solve(prog);
  return res.status == lp::Status::Optimal && res.value > 0;
}

bool interior_contains(const PointSet& a, const LatticePoint& x, const ContainmentContext& ctx) {
  return interior_contains(a, x.to_rational(), ctx);
}

std::size_t affine_dimension(const PointSet& a, const ContainmentContext& ctx) {
  require_nonempty(a, "affine_dimension");
  linalg::Matrix rows;
  for (const auto& p : a) rows.push_back((p - a[0]).to_rational());
  for (const auto& d : ctx.mod_directions) rows.push_back(d.to_rational());
  return linalg::rank(std::move(rows));
}

}  // namespace pairstab

#include <pairstab/limits.hpp>

#include <pairstab/lp.hpp>

namespace pairstab {

namespace {

bool is_subset(const PointSet& b, const PointSet& a) {
  for (const auto& p : b)
    if (!a.contains(p)) return false;
  return true;
}

}  // namespace

bool extension_criterion(const PointSet& a, const PointSet& b, const ContainmentContext& ctx) {
  if (b.empty()) throw Error("extension_criterion: B must be nonempty");
  if (!is_subset(b, a)) throw Error("extension_criterion: B is not a subset of A");
  PointSet rest = a.minus(b);
  if (rest.empty()) return true;
  return hull_contains(b.with(LatticePoint::zero(a.rank())), rest, ctx);
}

OnePS find_degeneration(const PointSet& a, const PointSet& b, const ContainmentContext& ctx) {
  if (b.empty()) throw Error("find_degeneration: B must be nonempty");
  if (!is_subset(b, a)) throw Error("find_degeneration: B is not a subset of A");
  PointSet rest = a.minus(b);
  if (rest.empty()) throw Error("find_degeneration: B must be a proper subset of A");
  ctx.validate(a.rank());

  // Variables: u (r, free), c (free), t (r, >= |u_i|). Minimize sum t.
  const std::size_t r = a.rank();
  const std::size_t c_var = r, t0 = r + 1;
  lp::Program prog(2 * r + 1);
  for (std::size_t i = 0; i <= r; ++i) prog.free_var[i] = true;
  for (const auto& p : b) {
    RationalVector row(prog.num_vars, 0);
    for (std::size_t i = 0; i < r; ++i) row[i] = p[i];
    row[c_var] = -1;
    prog.add(std::move(row), lp::Sense::Equal, 0);
  }
  for (const auto& p : rest) {
    RationalVector row(prog.num_vars, 0);
    for (std::size_t i = 0; i < r; ++i) row[i] = p[i];
    row[c_var] = -1;
    prog.add(std::move(row), lp::Sense::GreaterEqual, 1);
  }
  for (const auto& d : ctx.mod_directions) {
    RationalVector row(prog.num_vars, 0);
    for (std::size_t i = 0; i < r; ++i) row[i] = d[i];
    prog.add(std::move(row), lp::Sense::Equal, 0);
  }
  for (std::size_t i = 0; i < r; ++i) {
    RationalVector hi(prog.num_vars, 0), lo(prog.num_vars, 0);
    hi[t0 + i] = 1;
    hi[i] = -1;
    lo[t0 + i] = 1;
    lo[i] = 1;
    prog.add(std::move(hi), lp::Sense::GreaterEqual, 0);
    prog.add(std::move(lo), lp::Sense::GreaterEqual, 0);
  }
  prog.objective.assign(prog.num_vars, 0);
  for (std::size_t i = 0; i < r; ++i) prog.objective[t0 + i] = -1;

  auto res = lp::solve(prog);
  if (res.status != lp::Status::Optimal) throw NotALimitSupport("B is not a limit support");
  RationalFunctional g{RationalVector(res.x.begin(), res.x.begin() + static_cast<std::ptrdiff_t>(r))};
  return clear_denominators(g);
}

PointSet limit_support(const PointSet& a, const OnePS& u) {
  Integer lo = min_functional(a, u);
  std::vector<LatticePoint> out;
  for (const auto& p : a)
    if (pair(u, p) == lo) out.push_back(p);
  return PointSet(std::move(out));
}

}  // namespace pairstab

#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace oracle {

namespace {

using Row = std::vector<Rational>;

// Kernel of an integer matrix, as primitive integer vectors.
std::vector<std::vector<Integer>> kernel(std::vector<Row> m, std::size_t cols) {
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    auto it = std::find_if(m.begin() + static_cast<std::ptrdiff_t>(r), m.end(), [c](const Row& row) { return row[c] != 0; });
    if (it == m.end()) continue;
    std::iter_swap(m.begin() + static_cast<std::ptrdiff_t>(r), it);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t k = 0; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<std::vector<Integer>> out;
  for (std::size_t fc = 0; fc < cols; ++fc) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), fc) != pivot_cols.end()) continue;
    Row x(cols, 0);
    x[fc] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = -m[i][fc] / m[i][pivot_cols[i]];
    Integer l = 1;
    for (const auto& q : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Integer> z;
    Integer g = 0;
    for (const auto& q : x) {
      z.push_back(q.get_num() * (l / q.get_den()));
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.back().get_mpz_t());
    }
    for (auto& c : z) c /= g;
    out.push_back(std::move(z));
  }
  return out;
}

Integer dot(const std::vector<Integer>& u, const LatticePoint& a) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.rank(); ++i) s += u[i] * a[i];
  return s;
}

Row as_row(const LatticePoint& a) {
  Row r;
  for (const auto& c : a.coords()) r.emplace_back(c);
  return r;
}

struct HyperplaneData {
  std::vector<std::vector<Integer>> hull_normals;   // annihilate aff(points) + constraints
  std::vector<std::vector<Integer>> facet_normals;  // inward
};

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

HyperplaneData hyperplanes(const PointSet& pts, const std::vector<LatticePoint>& constraints) {
  const std::size_t r = pts.rank();
  std::vector<Row> lin;
  for (const auto& p : pts) lin.push_back(as_row(p - pts[0]));
  for (const auto& c : constraints) lin.push_back(as_row(c));
  HyperplaneData out;
  out.hull_normals = kernel(lin, r);
  const std::size_t dim = r - out.hull_normals.size() - constraints.size();

  if (dim == 0) return out;
  std::vector<Row> base;
  for (const auto& c : constraints) base.push_back(as_row(c));
  for (const auto& n : out.hull_normals) {
    Row row;
    for (const auto& c : n) row.emplace_back(c);
    base.push_back(row);
  }
  for_each_subset(pts.size(), dim, [&](const std::vector<std::size_t>& s) {
    auto rows = base;
    for (std::size_t k = 1; k < s.size(); ++k) rows.push_back(as_row(pts[s[k]] - pts[s[0]]));
    auto ker = kernel(rows, r);
    if (ker.size() != 1) return;
    auto u = ker.front();
    const Integer c = dot(u, pts[s[0]]);
    bool above = true, below = true;
    for (const auto& p : pts) {
      Integer v = dot(u, p);
      if (v < c) above = false;
      if (v > c) below = false;
    }
    if (!above && !below) return;
    if (!above)
      for (auto& x : u) x = -x;
    if (std::find(out.facet_normals.begin(), out.facet_normals.end(), u) == out.facet_normals.end())
      out.facet_normals.push_back(std::move(u));
  });
  return out;
}

}  // namespace

std::vector<OnePS> weight_test_normals(const PointSet& points, const std::vector<LatticePoint>& constraints) {
  auto h = hyperplanes(points, constraints);
  std::vector<OnePS> out;
  for (const auto& n : h.hull_normals) {
    out.emplace_back(n);
    out.push_back(-out.back());
  }
  for (const auto& u : h.facet_normals) out.emplace_back(u);
  return out;
}

bool halfspace_contains(const PointSet& a, const PointSet& b, const std::vector<LatticePoint>& constraints) {
  auto h = hyperplanes(a, constraints);
  for (const auto& n : h.hull_normals)
    for (const auto& p : b)
      if (dot(n, p - a[0]) != 0) return false;
  for (const auto& u : h.facet_normals) {
    Integer lo = dot(u, a[0]);
    for (const auto& p : a) lo = std::min(lo, dot(u, p));
    for (const auto& p : b)
      if (dot(u, p) < lo) return false;
  }
  return true;
}

bool facet_weight_test(const Pair& p) {
  for (const auto& u : weight_test_normals(p.w.support(), p.problem.constraints()))
    if (futaki_gen(u, p) > 0) return false;
  return true;
}

std::vector<OnePS> box_ops(std::size_t rank, int box, const std::vector<LatticePoint>& constraints) {
  std::vector<OnePS> out;
  std::vector<long> u(rank, -box);
  for (;;) {
    std::vector<Integer> coords(u.begin(), u.end());
    OnePS cand(coords);
    bool ok = true;
    for (const auto& c : constraints)
      if (pair(cand, c) != 0) ok = false;
    if (ok) out.push_back(std::move(cand));
    std::size_t i = 0;
    while (i < rank && u[i] == box) u[i++] = -box;
    if (i == rank) break;
    ++u[i];
  }
  return out;
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

LatticePoint random_point(Rng& rng, std::size_t rank, int lo, int hi) {
  std::vector<Integer> c;
  for (std::size_t i = 0; i < rank; ++i) c.emplace_back(uniform(rng, lo, hi));
  return LatticePoint(std::move(c));
}

PointSet random_points(Rng& rng, std::size_t rank, std::size_t count, int lo, int hi) {
  std::vector<LatticePoint> pts;
  for (std::size_t i = 0; i < count; ++i) pts.push_back(random_point(rng, rank, lo, hi));
  return PointSet(std::move(pts));
}

WeightedVector random_weighted(Rng& rng, const PointSet& support) {
  std::map<LatticePoint, Rational> m;
  for (const auto& a : support) {
    Rational q(uniform(rng, 1, 16), 4);  // magnitudes in [1/4, 4]
    q.canonicalize();
    m.emplace(a, q);
  }
  return WeightedVector(std::move(m));
}

Pair random_pair(Rng& rng, std::size_t max_rank, std::size_t max_support) {
  const auto rank = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(max_rank)));
  const bool sl = rank >= 2 && uniform(rng, 0, 2) == 0;
  StabilityProblem problem = sl ? StabilityProblem::special_linear(rank) : StabilityProblem::cross_polytope(rank);

  const PointSet w = random_points(rng, rank, static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(max_support))), -5, 5);
  PointSet v(rank);
  switch (uniform(rng, 0, 2)) {
    case 0: {  // inside by construction: subset of w plus integral midpoints
      std::vector<LatticePoint> pts;
      for (const auto& a : w)
        if (uniform(rng, 0, 1) == 0) pts.push_back(a);
      for (int k = 0; k < 3; ++k) {
        LatticePoint s = w[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(w.size()) - 1))] +
                         w[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(w.size()) - 1))];
        bool even = true;
        for (const auto& c : s.coords())
          if (c % 2 != 0) even = false;
        if (!even) continue;
        for (std::size_t i = 0; i < rank; ++i) s[i] /= 2;
        pts.push_back(s);
      }
      if (pts.empty()) pts.push_back(w[0]);
      while (pts.size() > max_support) pts.pop_back();
      v = PointSet(std::move(pts));
      break;
    }
    case 1:
      v = random_points(rng, rank, static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(max_support))), -2, 2);
      break;
    default:
      v = random_points(rng, rank, static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(max_support))), -5, 5);
      break;
  }
  return Pair(random_weighted(rng, v), random_weighted(rng, w), std::move(problem));
}

BinaryForm random_form(Rng& rng, int degree, const BinaryForm* bias) {
  std::vector<ProjectivePoint> pool;
  if (bias)
    for (const auto& [pt, k] : bias->roots()) pool.push_back(pt);
  std::map<ProjectivePoint, int> roots;
  for (int i = 0; i < degree; ++i) {
    if (!pool.empty() && uniform(rng, 0, 2) != 0) {
      roots[pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pool.size()) - 1))]] += 1;
      continue;
    }
    int p = uniform(rng, -3, 3), q = uniform(rng, 0, 3);
    if (p == 0 && q == 0) q = 1;
    ProjectivePoint pt(p, q);
    roots[pt] += 1;
    pool.push_back(pt);  // encourage repeated roots
  }
  Rational scale(uniform(rng, 1, 5) * (uniform(rng, 0, 1) ? 1 : -1), uniform(rng, 1, 3));
  scale.canonicalize();
  return BinaryForm(std::move(roots), scale);
}

}  // namespace oracle

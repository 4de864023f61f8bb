#include <pairstab/linalg.hpp>

namespace pairstab::linalg {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(Matrix rows) {
  if (rows.empty()) return 0;
  return rref(rows, rows.front().size()).size();
}

std::vector<RationalVector> nullspace(Matrix rows, std::size_t cols) {
  for (const auto& r : rows)
    if (r.size() != cols) throw Error("nullspace: ragged matrix");
  auto pivots = rref(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    RationalVector x(cols, 0);
    x[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -rows[i][free_col];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<RationalVector> solve(Matrix a, RationalVector b) {
  if (a.size() != b.size()) throw Error("solve: dimension mismatch");
  std::size_t cols = a.empty() ? 0 : a.front().size();
  for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
  auto pivots = rref(a, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  RationalVector x(cols, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][cols];
  return x;
}

bool in_span(const std::vector<RationalVector>& vectors, const RationalVector& x) {
  bool zero = true;
  for (const auto& c : x)
    if (c != 0) zero = false;
  if (zero) return true;
  if (vectors.empty()) return false;
  Matrix a(x.size(), RationalVector(vectors.size()));
  for (std::size_t j = 0; j < vectors.size(); ++j)
    for (std::size_t i = 0; i < x.size(); ++i) a[i][j] = vectors[j][i];
  return solve(std::move(a), x).has_value();
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw Error("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

ComplementProjector::ComplementProjector(std::vector<RationalVector> directions) {
  for (auto& d : directions) {
    RationalVector e = d;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      Rational f = dot(d, basis_[k]) / norms_[k];
      for (std::size_t i = 0; i < e.size(); ++i) e[i] -= f * basis_[k][i];
    }
    Rational n = dot(e, e);
    if (n == 0) throw Error("directions are linearly dependent");
    basis_.push_back(std::move(e));
    norms_.push_back(std::move(n));
  }
}

RationalVector ComplementProjector::operator()(const RationalVector& x) const {
  RationalVector y = x;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    Rational f = dot(x, basis_[k]) / norms_[k];
    for (std::size_t i = 0; i < y.size(); ++i) y[i] -= f * basis_[k][i];
  }
  return y;
}

}  // namespace pairstab::linalg

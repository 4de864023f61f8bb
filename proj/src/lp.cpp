#include <pairstab/lp.hpp>

#include <cstdint>

namespace pairstab::lp {

void Program::add(RationalVector coeffs, Sense sense, Rational rhs) {
  if (coeffs.size() != num_vars) throw Error("lp: constraint has wrong number of coefficients");
  rows.push_back({std::move(coeffs), sense, std::move(rhs)});
}

namespace {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : cols_(cols), t_(rows, RationalVector(cols + 1, 0)), basis_(rows, 0) {}

  Rational& at(std::size_t r, std::size_t c) { return t_[r][c]; }
  Rational& rhs(std::size_t r) { return t_[r][cols_]; }
  std::size_t rows() const { return t_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t& basis(std::size_t r) { return basis_[r]; }

  void pivot(std::size_t r, std::size_t c, RationalVector& obj) {
    Rational inv = 1 / t_[r][c];
    for (auto& x : t_[r]) x *= inv;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i == r || t_[i][c] == 0) continue;
      Rational f = t_[i][c];
      for (std::size_t k = 0; k <= cols_; ++k) t_[i][k] -= f * t_[r][k];
    }
    if (obj[c] != 0) {
      Rational f = obj[c];
      for (std::size_t k = 0; k <= cols_; ++k) obj[k] -= f * t_[r][k];
    }
    basis_[r] = c;
  }

  void drop_row(std::size_t r) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  // Maximizes cost . x over columns flagged in `allowed`. Returns false when
  // unbounded. The objective row is kept in reduced-cost form (-c + c_B B^-1 A).
  bool maximize(const RationalVector& cost, const std::vector<bool>& allowed, Rational& value) {
    RationalVector obj(cols_ + 1, 0);
    for (std::size_t j = 0; j < cols_; ++j) obj[j] = -cost[j];
    for (std::size_t i = 0; i < t_.size(); ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t k = 0; k <= cols_; ++k) obj[k] += cb * t_[i][k];
    }
    for (;;) {
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (allowed[j] && obj[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols_) break;
      std::size_t leave = t_.size();
      Rational best;
      for (std::size_t i = 0; i < t_.size(); ++i) {
        if (t_[i][enter] <= 0) continue;
        Rational ratio = t_[i][cols_] / t_[i][enter];
        if (leave == t_.size() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == t_.size()) return false;
      pivot(leave, enter, obj);
    }
    value = obj[cols_];
    return true;
  }

 private:
  std::size_t cols_;
  std::vector<RationalVector> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

Result solve(const Program& program) {
  const std::size_t n = program.num_vars;
  if (!program.objective.empty() && program.objective.size() != n)
    throw Error("lp: objective has wrong length");

  // Column layout: structural columns (free variables split in two), then one
  // slack/surplus per inequality row, then one artificial per row needing it.
  std::vector<std::size_t> pos_col(n), neg_col(n, SIZE_MAX);
  std::size_t cols = 0;
  for (std::size_t j = 0; j < n; ++j) {
    pos_col[j] = cols++;
    if (program.free_var[j]) neg_col[j] = cols++;
  }
  const std::size_t m = program.rows.size();

  std::vector<Sense> sense(m);
  std::vector<Rational> sign(m, 1);
  std::vector<std::size_t> slack_col(m, SIZE_MAX), art_col(m, SIZE_MAX);
  for (std::size_t i = 0; i < m; ++i) {
    sense[i] = program.rows[i].sense;
    if (program.rows[i].rhs < 0) {
      sign[i] = -1;
      if (sense[i] == Sense::LessEqual)
        sense[i] = Sense::GreaterEqual;
      else if (sense[i] == Sense::GreaterEqual)
        sense[i] = Sense::LessEqual;
    }
    if (sense[i] != Sense::Equal) slack_col[i] = cols++;
  }
  const std::size_t first_art = cols;
  for (std::size_t i = 0; i < m; ++i)
    if (sense[i] != Sense::LessEqual) art_col[i] = cols++;

  Tableau tab(m, cols);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = program.rows[i];
    for (std::size_t j = 0; j < n; ++j) {
      Rational a = sign[i] * row.coeffs[j];
      tab.at(i, pos_col[j]) = a;
      if (neg_col[j] != SIZE_MAX) tab.at(i, neg_col[j]) = -a;
    }
    tab.rhs(i) = sign[i] * row.rhs;
    if (sense[i] == Sense::LessEqual) {
      tab.at(i, slack_col[i]) = 1;
      tab.basis(i) = slack_col[i];
    } else {
      if (sense[i] == Sense::GreaterEqual) tab.at(i, slack_col[i]) = -1;
      tab.at(i, art_col[i]) = 1;
      tab.basis(i) = art_col[i];
    }
  }

  Result result;
  std::vector<bool> all(cols, true);
  if (first_art < cols) {
    RationalVector phase1(cols, 0);
    for (std::size_t j = first_art; j < cols; ++j) phase1[j] = -1;
    Rational v;
    tab.maximize(phase1, all, v);
    if (v < 0) {
      result.status = Status::Infeasible;
      return result;
    }
    // Drive remaining (zero-level) artificials out of the basis.
    RationalVector dummy(cols + 1, 0);
    for (std::size_t i = 0; i < tab.rows();) {
      if (tab.basis(i) < first_art) {
        ++i;
        continue;
      }
      std::size_t enter = first_art;
      for (std::size_t j = 0; j < first_art; ++j) {
        if (tab.at(i, j) != 0) {
          enter = j;
          break;
        }
      }
      if (enter == first_art) {
        tab.drop_row(i);  // redundant equality
      } else {
        tab.pivot(i, enter, dummy);
        ++i;
      }
    }
  }

  std::vector<bool> allowed(cols, false);
  for (std::size_t j = 0; j < first_art; ++j) allowed[j] = true;
  RationalVector cost(cols, 0);
  if (!program.objective.empty()) {
    for (std::size_t j = 0; j < n; ++j) {
      cost[pos_col[j]] = program.objective[j];
      if (neg_col[j] != SIZE_MAX) cost[neg_col[j]] = -program.objective[j];
    }
  }
  Rational value;
  if (!tab.maximize(cost, allowed, value)) {
    result.status = Status::Unbounded;
    return result;
  }

  RationalVector colval(cols, 0);
  for (std::size_t i = 0; i < tab.rows(); ++i) colval[tab.basis(i)] = tab.rhs(i);
  result.x.assign(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    result.x[j] = colval[pos_col[j]];
    if (neg_col[j] != SIZE_MAX) result.x[j] -= colval[neg_col[j]];
  }
  result.value = value;
  result.status = Status::Optimal;
  return result;
}

}  // namespace pairstab::lp

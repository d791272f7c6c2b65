#include "simplex.hpp"

#include <cassert>

namespace treespace {

void LinearProgram::add_le(std::vector<Rat> row, Rat bound) {
  assert(static_cast<int>(row.size()) == num_vars);
  rows.push_back(std::move(row));
  rhs.push_back(std::move(bound));
}

void LinearProgram::add_ge(std::vector<Rat> row, Rat bound) {
  for (Rat& v : row) v = -v;
  add_le(std::move(row), -bound);
}

void LinearProgram::add_eq(const std::vector<Rat>& row, const Rat& bound) {
  add_le(row, bound);
  add_ge(row, bound);
}

namespace {

class Tableau {
 public:
  Tableau(const LinearProgram& lp)
      : m_(static_cast<int>(lp.rows.size())), n_(lp.num_vars) {
    // columns: structural 0..n-1, slacks n..n+m-1, then artificials, rhs last
    int slack0 = n_;
    art0_ = n_ + m_;
    num_art_ = 0;
    for (int i = 0; i < m_; ++i)
      if (lp.rhs[i] < 0) ++num_art_;
    cols_ = n_ + m_ + num_art_;
    a_.assign(m_, std::vector<Rat>(cols_ + 1, Rat(0)));
    basis_.assign(m_, -1);
    int art = art0_;
    for (int i = 0; i < m_; ++i) {
      bool flip = lp.rhs[i] < 0;
      for (int j = 0; j < n_; ++j) a_[i][j] = flip ? -lp.rows[i][j] : lp.rows[i][j];
      a_[i][slack0 + i] = flip ? Rat(-1) : Rat(1);
      a_[i][cols_] = flip ? -lp.rhs[i] : lp.rhs[i];
      if (flip) {
        a_[i][art] = 1;
        basis_[i] = art;
        ++art;
      } else {
        basis_[i] = slack0 + i;
      }
    }
  }

  bool phase1() {
    if (num_art_ == 0) return true;
    // maximize -(sum of artificials)
    std::vector<Rat> obj(cols_, Rat(0));
    for (int k = 0; k < num_art_; ++k) obj[art0_ + k] = -1;
    set_objective(obj);
    enter_limit_ = cols_;
    run();
    if (value() != 0) return false;
    // Pivot remaining basic artificials out or drop redundant rows.
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < art0_) continue;
      int pivot_col = -1;
      for (int j = 0; j < art0_; ++j)
        if (a_[i][j] != 0) {
          pivot_col = j;
          break;
        }
      if (pivot_col >= 0) {
        pivot(i, pivot_col);
      } else {
        // redundant zero row; harmless, keep the artificial at zero
      }
    }
    return true;
  }

  void set_objective(const std::vector<Rat>& obj) {
    obj_.assign(cols_ + 1, Rat(0));
    for (int j = 0; j < static_cast<int>(obj.size()); ++j) obj_[j] = obj[j];
    // Price out the current basis.
    for (int i = 0; i < m_; ++i) {
      const Rat cb = obj_[basis_[i]];
      if (cb == 0) continue;
      for (int j = 0; j <= cols_; ++j) obj_[j] -= cb * a_[i][j];
    }
  }

  LpSolution::Status run() {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < enter_limit_; ++j)
        if (obj_[j] > 0) {
          enter = j;
          break;  // Bland: smallest improving index
        }
      if (enter < 0) return LpSolution::Status::Optimal;
      int leave = -1;
      Rat best_ratio;
      for (int i = 0; i < m_; ++i) {
        if (a_[i][enter] <= 0) continue;
        Rat ratio = a_[i][cols_] / a_[i][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave < 0) return LpSolution::Status::Unbounded;
      pivot(leave, enter);
    }
  }

  void pivot(int row, int col) {
    Rat p = a_[row][col];
    for (int j = 0; j <= cols_; ++j) a_[row][j] /= p;
    for (int i = 0; i < m_; ++i) {
      if (i == row || a_[i][col] == 0) continue;
      Rat f = a_[i][col];
      for (int j = 0; j <= cols_; ++j) a_[i][j] -= f * a_[row][j];
    }
    if (obj_[col] != 0) {
      Rat f = obj_[col];
      for (int j = 0; j <= cols_; ++j) obj_[j] -= f * a_[row][j];
    }
    basis_[row] = col;
  }

  void restrict_to_structural() { enter_limit_ = art0_; }

  Rat value() const { return -obj_[cols_]; }

  std::vector<Rat> extract(int n) const {
    std::vector<Rat> x(n, Rat(0));
    for (int i = 0; i < m_; ++i)
      if (basis_[i] < n) x[basis_[i]] = a_[i][cols_];
    return x;
  }

  int art0() const { return art0_; }

 private:
  int m_, n_, cols_, art0_, num_art_;
  int enter_limit_ = 0;
  std::vector<std::vector<Rat>> a_;
  std::vector<Rat> obj_;
  std::vector<int> basis_;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  LpSolution out;
  Tableau t(lp);
  if (!t.phase1()) {
    out.status = LpSolution::Status::Infeasible;
    return out;
  }
  std::vector<Rat> obj(lp.num_vars, Rat(0));
  for (int j = 0; j < lp.num_vars; ++j) obj[j] = lp.objective[j];
  t.set_objective(obj);
  t.restrict_to_structural();
  out.status = t.run();
  if (out.status == LpSolution::Status::Optimal) {
    out.value = t.value();
    out.x = t.extract(lp.num_vars);
  }
  return out;
}

}  // namespace treespace

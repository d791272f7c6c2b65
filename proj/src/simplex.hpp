#pragma once

#include <vector>

#include "rational.hpp"

namespace treespace {

// maximize objective ⋅ x  subject to  rows[i] ⋅ x <= rhs[i],  x >= 0.
struct LinearProgram {
  int num_vars = 0;
  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> rhs;
  std::vector<Rat> objective;

  void add_le(std::vector<Rat> row, Rat bound);
  void add_ge(std::vector<Rat> row, Rat bound);
  void add_eq(const std::vector<Rat>& row, const Rat& bound);
};

struct LpSolution {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status = Status::Infeasible;
  Rat value;
  std::vector<Rat> x;
};

// Exact two-phase simplex with Bland's rule; never cycles.
LpSolution solve_lp(const LinearProgram& lp);

}  // namespace treespace

#include <doctest.h>

#include "simplex.hpp"

using namespace treespace;

TEST_CASE("simple maximization") {
  LinearProgram lp;
  lp.num_vars = 2;
  lp.add_le({Rat(1), Rat(1)}, Rat(1));
  lp.add_le({Rat(1), Rat(0)}, Rat(3, 4));
  lp.objective = {Rat(2), Rat(1)};
  auto s = solve_lp(lp);
  REQUIRE(s.status == LpSolution::Status::Optimal);
  CHECK(s.value == Rat(7, 4));
  CHECK(s.x[0] == Rat(3, 4));
  CHECK(s.x[1] == Rat(1, 4));
}

TEST_CASE("two-phase with lower bounds") {
  LinearProgram lp;
  lp.num_vars = 1;
  lp.add_le({Rat(1)}, Rat(1));
  lp.add_ge({Rat(1)}, Rat(1, 2));
  lp.objective = {Rat(-1)};
  auto s = solve_lp(lp);
  REQUIRE(s.status == LpSolution::Status::Optimal);
  CHECK(s.value == Rat(-1, 2));
  CHECK(s.x[0] == Rat(1, 2));
}

TEST_CASE("feasible point honors every constraint") {
  LinearProgram lp;
  lp.num_vars = 2;
  lp.add_le({Rat(1), Rat(1)}, Rat(1));
  lp.add_ge({Rat(2), Rat(1)}, Rat(3, 2));
  lp.objective = {Rat(0), Rat(1)};
  auto s = solve_lp(lp);
  REQUIRE(s.status == LpSolution::Status::Optimal);
  CHECK(s.value == Rat(1, 2));
  CHECK(s.x[0] + s.x[1] <= 1);
  CHECK(2 * s.x[0] + s.x[1] >= Rat(3, 2));
}

TEST_CASE("infeasible and unbounded detection") {
  LinearProgram bad;
  bad.num_vars = 1;
  bad.add_le({Rat(1)}, Rat(1));
  bad.add_ge({Rat(1)}, Rat(2));
  bad.objective = {Rat(1)};
  CHECK(solve_lp(bad).status == LpSolution::Status::Infeasible);

  LinearProgram open;
  open.num_vars = 2;
  open.add_le({Rat(1), Rat(-1)}, Rat(1));
  open.objective = {Rat(1), Rat(0)};
  CHECK(solve_lp(open).status == LpSolution::Status::Unbounded);
}

TEST_CASE("equality constraints") {
  LinearProgram lp;
  lp.num_vars = 2;
  lp.add_eq({Rat(1), Rat(1)}, Rat(1));
  lp.add_le({Rat(1), Rat(0)}, Rat(1, 3));
  lp.objective = {Rat(1), Rat(-1)};
  auto s = solve_lp(lp);
  REQUIRE(s.status == LpSolution::Status::Optimal);
  CHECK(s.x[0] == Rat(1, 3));
  CHECK(s.x[1] == Rat(2, 3));
  CHECK(s.value == Rat(-1, 3));
}

TEST_CASE("degenerate ties terminate") {
  LinearProgram lp;
  lp.num_vars = 3;
  lp.add_le({Rat(1), Rat(1), Rat(0)}, Rat(0));
  lp.add_le({Rat(1), Rat(0), Rat(1)}, Rat(0));
  lp.add_le({Rat(0), Rat(1), Rat(1)}, Rat(1));
  lp.objective = {Rat(1), Rat(1), Rat(1)};
  auto s = solve_lp(lp);
  REQUIRE(s.status == LpSolution::Status::Optimal);
  CHECK(s.value == 0);  // nonnegativity pins every variable at zero
}

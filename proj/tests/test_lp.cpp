#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "d2dprice/lp.hpp"
#include "d2dprice/rng.hpp"
#include "lp_enum.hpp"

using namespace d2d::lp;

namespace {

double residual_norm(const LpProblem& prob, const std::vector<double>& x) {
  double worst = 0.0;
  for (std::size_t r = 0; r < prob.b_ub.size(); ++r) {
    double ax = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) ax += prob.a_ub[r][j] * x[j];
    worst = std::max(worst, ax - prob.b_ub[r]);
  }
  for (std::size_t r = 0; r < prob.b_eq.size(); ++r) {
    double ax = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) ax += prob.a_eq[r][j] * x[j];
    worst = std::max(worst, std::fabs(ax - prob.b_eq[r]));
  }
  return worst;
}

void check_optimal_invariants(const LpProblem& prob, const LpSolution& sol) {
  REQUIRE(sol.status == LpStatus::optimal);
  REQUIRE(sol.x.size() == prob.num_vars());
  for (double v : sol.x) CHECK(v >= -1e-9);
  CHECK(residual_norm(prob, sol.x) <= 1e-8);
  double obj = 0.0;
  for (std::size_t j = 0; j < sol.x.size(); ++j) obj += prob.c[j] * sol.x[j];
  CHECK(sol.objective == doctest::Approx(obj).epsilon(1e-9));
}

// Feasible and bounded by construction: b_ub leaves slack around a random
// nonnegative point and a box row caps the coordinate sum.
LpProblem random_bounded(d2d::Rng& rng) {
  const int n = 2 + static_cast<int>(rng.raw() % 4);
  const int mu = 1 + static_cast<int>(rng.raw() % 5);
  const int me = static_cast<int>(rng.raw() % 3);

  LpProblem prob;
  prob.c.resize(n);
  for (double& v : prob.c) v = rng.uniform(-1.0, 2.0);

  std::vector<double> x0(n);
  for (double& v : x0) v = rng.uniform(0.0, 2.0);

  double x0_sum = 0.0;
  for (int j = 0; j < n; ++j) x0_sum += x0[j];

  for (int r = 0; r < mu; ++r) {
    std::vector<double> row(n);
    double ax = 0.0;
    for (int j = 0; j < n; ++j) {
      row[j] = rng.uniform(-1.0, 1.0);
      ax += row[j] * x0[j];
    }
    prob.a_ub.push_back(std::move(row));
    prob.b_ub.push_back(ax + rng.uniform(0.1, 2.0));
  }
  prob.a_ub.push_back(std::vector<double>(n, 1.0));
  prob.b_ub.push_back(x0_sum + 10.0);

  for (int r = 0; r < me; ++r) {
    std::vector<double> row(n);
    double ax = 0.0;
    for (int j = 0; j < n; ++j) {
      row[j] = rng.uniform(-1.0, 1.0);
      ax += row[j] * x0[j];
    }
    prob.a_eq.push_back(std::move(row));
    prob.b_eq.push_back(ax);
  }
  return prob;
}

}  // namespace

TEST_CASE("trivial status examples") {
  LpProblem one;
  one.c = {1.0};
  one.a_ub = {{1.0}};
  one.b_ub = {3.0};
  LpSolution sol = solve_lp(one);
  REQUIRE(sol.status == LpStatus::optimal);
  CHECK(sol.x[0] == 3.0);
  CHECK(sol.objective == 3.0);

  one.b_ub = {-1.0};
  CHECK(solve_lp(one).status == LpStatus::infeasible);

  LpProblem free;
  free.c = {1.0};
  CHECK(solve_lp(free).status == LpStatus::unbounded);
}

TEST_CASE("problem validation") {
  LpProblem prob;
  CHECK_THROWS_AS(prob.validate(), std::invalid_argument);
  prob.c = {1.0, 1.0};
  prob.a_ub = {{1.0}};
  prob.b_ub = {1.0};
  CHECK_THROWS_AS(prob.validate(), std::invalid_argument);
  prob.a_ub = {{1.0, 1.0}};
  prob.b_ub = {};
  CHECK_THROWS_AS(prob.validate(), std::invalid_argument);
  prob.b_ub = {std::nan("")};
  CHECK_THROWS_AS(prob.validate(), std::invalid_argument);
  prob.b_ub = {1.0};
  CHECK_NOTHROW(prob.validate());
}

TEST_CASE("equality rows and artificials") {
  LpProblem prob;
  prob.c = {1.0, 1.0};
  prob.a_eq = {{1.0, 1.0}};
  prob.b_eq = {1.0};
  LpSolution sol = solve_lp(prob);
  check_optimal_invariants(prob, sol);
  CHECK(sol.objective == doctest::Approx(1.0).epsilon(1e-12));

  // redundant duplicate row stays consistent
  prob.a_eq.push_back({1.0, 1.0});
  prob.b_eq.push_back(1.0);
  sol = solve_lp(prob);
  check_optimal_invariants(prob, sol);
  CHECK(sol.objective == doctest::Approx(1.0).epsilon(1e-12));

  // contradictory rows are infeasible
  prob.b_eq[1] = 2.0;
  CHECK(solve_lp(prob).status == LpStatus::infeasible);

  // minimize toward a vertex
  LpProblem min_side;
  min_side.c = {-1.0, -1.0};
  min_side.a_eq = {{1.0, 1.0}};
  min_side.b_eq = {1.0};
  sol = solve_lp(min_side);
  check_optimal_invariants(min_side, sol);
  CHECK(sol.objective == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("unbounded direction behind an equality") {
  LpProblem prob;
  prob.c = {1.0, 0.0};
  prob.a_eq = {{0.0, 1.0}};
  prob.b_eq = {1.0};
  CHECK(solve_lp(prob).status == LpStatus::unbounded);
}

TEST_CASE("degenerate pivoting terminates") {
  // Beale's cycling example; Bland's rule must reach the optimum.
  LpProblem prob;
  prob.c = {0.75, -150.0, 0.02, -6.0};
  prob.a_ub = {
      {0.25, -60.0, -0.04, 9.0},
      {0.5, -90.0, -0.02, 3.0},
      {0.0, 0.0, 1.0, 0.0},
  };
  prob.b_ub = {0.0, 0.0, 1.0};
  LpSolution sol = solve_lp(prob);
  check_optimal_invariants(prob, sol);
  lpenum::EnumResult oracle = lpenum::enumerate_vertices(prob);
  REQUIRE(oracle.feasible);
  CHECK(sol.objective == doctest::Approx(oracle.objective).epsilon(1e-10));

  // degenerate vertex at the origin
  LpProblem tied;
  tied.c = {1.0, 1.0};
  tied.a_ub = {{1.0, -1.0}, {-1.0, 1.0}, {1.0, 1.0}};
  tied.b_ub = {0.0, 0.0, 2.0};
  sol = solve_lp(tied);
  check_optimal_invariants(tied, sol);
  CHECK(sol.objective == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("weak duality spot check") {
  LpProblem prob;
  prob.c = {1.0, 2.0};
  prob.a_ub = {{1.0, 1.0}, {0.0, 1.0}};
  prob.b_ub = {4.0, 1.0};
  LpSolution sol = solve_lp(prob);
  check_optimal_invariants(prob, sol);
  // dual multipliers (1, 1) are feasible, bounding the objective by 5
  CHECK(sol.objective <= 5.0 + 1e-9);
  CHECK(sol.objective == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("determinism") {
  d2d::Rng rng(11);
  LpProblem prob = random_bounded(rng);
  LpSolution a = solve_lp(prob);
  LpSolution b = solve_lp(prob);
  CHECK(a.status == b.status);
  CHECK(a.x == b.x);
  CHECK(a.iterations == b.iterations);
}

TEST_CASE("random bounded problems match vertex enumeration") {
  d2d::Rng rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    LpProblem prob = random_bounded(rng);
    LpSolution sol = solve_lp(prob);
    lpenum::EnumResult oracle = lpenum::enumerate_vertices(prob);
    REQUIRE(oracle.feasible);
    check_optimal_invariants(prob, sol);
    CHECK(std::fabs(sol.objective - oracle.objective) <= 1e-8);
  }
}

TEST_CASE("random infeasible problems are detected") {
  d2d::Rng rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    LpProblem prob = random_bounded(rng);
    std::vector<double> row(prob.num_vars(), 0.0);
    row[0] = 1.0;
    prob.a_ub.push_back(std::move(row));
    prob.b_ub.push_back(-1.0);
    CHECK(solve_lp(prob).status == LpStatus::infeasible);
  }
}

TEST_CASE("random unbounded problems are detected") {
  d2d::Rng rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    LpProblem prob = random_bounded(rng);
    prob.c.push_back(1.0);
    for (auto& row : prob.a_ub) row.push_back(-rng.uniform(0.0, 1.0));
    for (auto& row : prob.a_eq) row.push_back(0.0);
    CHECK(solve_lp(prob).status == LpStatus::unbounded);
  }
}

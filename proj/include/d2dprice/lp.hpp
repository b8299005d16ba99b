#pragma once

#include <cstddef>
#include <vector>

namespace d2d::lp {

/// Dense linear program in the form
///   maximize    c . x
///   subject to  a_ub x <= b_ub,  a_eq x = b_eq,  x >= 0.
struct LpProblem {
  std::vector<double> c;
  std::vector<std::vector<double>> a_ub;
  std::vector<double> b_ub;
  std::vector<std::vector<double>> a_eq;
  std::vector<double> b_eq;

  std::size_t num_vars() const { return c.size(); }

  /// Throws std::invalid_argument on mismatched dimensions or non-finite
  /// coefficients.
  void validate() const;
};

enum class LpStatus { optimal, infeasible, unbounded };

const char* to_string(LpStatus s);

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  std::vector<double> x;      // empty unless status == optimal
  double objective = 0.0;     // c . x, meaningful only when status == optimal
  int iterations = 0;         // total simplex pivots
};

/// Two-phase primal simplex on a dense tableau with Bland's rule, so it
/// terminates on degenerate problems. tol is the pivot tolerance.
LpSolution solve_lp(const LpProblem& prob, double tol = 1e-9);

}  // namespace d2d::lp

#pragma once

#include <vector>

#include "d2dprice/lp.hpp"
#include "d2dprice/model.hpp"

namespace d2d {

/// Recovered z components at or below this floor mark a user's recovery as
/// degenerate; its power is reported as zero.
inline constexpr double kDegenerateZFloor = 1e-12;

/// Per-user prices that make a given power profile a fixed point of the
/// best-response map wherever it is interior:
/// prices_i = w_i h_ii / (g_i (sum_j p_j h_ji + sigma2)).
PriceVector prices_from_powers(const NetworkInstance& net, const PowerVector& p);

/// Revenue of the price-from-powers construction as a function of powers
/// alone: sum_i p_i w_i h_ii / (sum_j p_j h_ji + sigma2).
double differentiated_objective(const NetworkInstance& net, const PowerVector& p);

/// Variant of the linearized revenue program. The two differ in one index of
/// the equality rows; cross_term uses sum_j h_ji y_j + sigma2 z_i = 1, which
/// matches the change of variables y_i = p_i z_i, z_i = 1 / (sum_j p_j h_ji
/// + sigma2), while as_written uses (sum_j h_ji) y_i + sigma2 z_i = 1.
enum class LpMode { as_written, cross_term };

/// Builds the linearized revenue-maximization program over variables
/// (y_1..y_n, z_1..z_n): maximize sum_i w_i h_ii y_i subject to, for every i,
/// sum_k g_k y_k - i_th z_i <= 0, y_i - p_max_i z_i <= 0, the mode's
/// equality row, and nonnegativity.
lp::LpProblem build_lp(const NetworkInstance& net, LpMode mode = LpMode::cross_term);

struct VerificationReport {
  /// Sup-norm gap between the recovered powers and the equilibrium reached
  /// at the recovered prices.
  double fixed_point_residual = 0.0;
  /// Recovered powers satisfy the box and interference constraints, up to a
  /// 1e-9 relative slack absorbing the rounding of the y/z division.
  bool original_feasible = false;
  /// Revenue at the recovered point minus the uniform-pricing revenue on the
  /// same instance.
  double revenue_vs_uniform = 0.0;
};

struct DiffPricingResult {
  PriceVector prices;
  PowerVector powers;
  double objective = 0.0;     // revenue at the recovered powers
  double lp_objective = 0.0;  // objective value of the linear program itself
  lp::LpStatus lp_status = lp::LpStatus::infeasible;
  std::vector<int> degenerate_users;
  VerificationReport verification;
};

/// Solves the linearized program, recovers powers p_i = y_i / z_i (zero for
/// degenerate users), derives prices from the recovered powers, and verifies
/// the result against the equilibrium solver, the original constraints, and
/// the uniform-pricing revenue. Throws std::runtime_error when the linear
/// program is not optimal.
DiffPricingResult solve_optimal(const NetworkInstance& net, LpMode mode = LpMode::cross_term);

struct SuboptimalResult {
  PriceVector prices;
  PowerVector powers;
};

/// Closed-form per-user prices that split the interference budget in
/// proportion to each user's channel gain toward the base station, with the
/// induced best-response powers against noise only.
SuboptimalResult solve_suboptimal(const NetworkInstance& net);

}  // namespace d2d

#include "d2dprice/pricing_differentiated.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "d2dprice/game.hpp"
#include "d2dprice/pricing_uniform.hpp"

namespace d2d {

PriceVector prices_from_powers(const NetworkInstance& net, const PowerVector& p) {
  net.validate();
  if (static_cast<int>(p.size()) != net.n) throw std::invalid_argument("p must have n entries");
  PriceVector prices(net.n);
  for (int i = 0; i < net.n; ++i) {
    double denom = net.sigma2;
    for (int j = 0; j < net.n; ++j) denom += p[j] * net.gain(j, i);
    prices[i] = net.w[i] * net.gain(i, i) / (net.g[i] * denom);
  }
  return prices;
}

double differentiated_objective(const NetworkInstance& net, const PowerVector& p) {
  double acc = 0.0;
  for (int i = 0; i < net.n; ++i) {
    double denom = net.sigma2;
    for (int j = 0; j < net.n; ++j) denom += p[j] * net.gain(j, i);
    acc += p[i] * net.w[i] * net.gain(i, i) / denom;
  }
  return acc;
}

lp::LpProblem build_lp(const NetworkInstance& net, LpMode mode) {
  net.validate();
  const int n = net.n;
  lp::LpProblem prob;
  prob.c.assign(2 * static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) prob.c[i] = net.w[i] * net.gain(i, i);

  for (int i = 0; i < n; ++i) {
    std::vector<double> row(2 * static_cast<std::size_t>(n), 0.0);
    for (int k = 0; k < n; ++k) row[k] = net.g[k];
    row[n + i] = -net.i_th;
    prob.a_ub.push_back(std::move(row));
    prob.b_ub.push_back(0.0);

    row.assign(2 * static_cast<std::size_t>(n), 0.0);
    row[i] = 1.0;
    row[n + i] = -net.p_max[i];
    prob.a_ub.push_back(std::move(row));
    prob.b_ub.push_back(0.0);
  }

  for (int i = 0; i < n; ++i) {
    std::vector<double> row(2 * static_cast<std::size_t>(n), 0.0);
    if (mode == LpMode::cross_term) {
      for (int j = 0; j < n; ++j) row[j] = net.gain(j, i);
    } else {
      double col_sum = 0.0;
      for (int j = 0; j < n; ++j) col_sum += net.gain(j, i);
      row[i] = col_sum;
    }
    row[n + i] = net.sigma2;
    prob.a_eq.push_back(std::move(row));
    prob.b_eq.push_back(1.0);
  }
  return prob;
}

DiffPricingResult solve_optimal(const NetworkInstance& net, LpMode mode) {
  lp::LpProblem prob = build_lp(net, mode);
  lp::LpSolution sol = lp::solve_lp(prob);

  DiffPricingResult result;
  result.lp_status = sol.status;
  if (sol.status != lp::LpStatus::optimal) {
    throw std::runtime_error(std::string("differentiated pricing LP is ") + lp::to_string(sol.status));
  }
  result.lp_objective = sol.objective;

  const int n = net.n;
  result.powers.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double y = sol.x[i];
    double z = sol.x[static_cast<std::size_t>(n) + i];
    if (z <= kDegenerateZFloor) {
      result.degenerate_users.push_back(i);
    } else {
      result.powers[i] = y / z;
    }
  }
  result.prices = prices_from_powers(net, result.powers);
  result.objective = bs_revenue(net, result.powers, result.prices);

  NeResult ne = solve_ne(net, result.prices);
  double residual = 0.0;
  for (int i = 0; i < n; ++i) residual = std::max(residual, std::fabs(ne.powers[i] - result.powers[i]));
  result.verification.fixed_point_residual = residual;
  bool box_ok = true;
  for (int i = 0; i < n; ++i) {
    if (!(result.powers[i] >= 0.0) || result.powers[i] > net.p_max[i] * (1.0 + 1e-9)) box_ok = false;
  }
  result.verification.original_feasible =
      box_ok && total_interference(net, result.powers) <= net.i_th * (1.0 + 1e-9);
  result.verification.revenue_vs_uniform = result.objective - solve_uniform(net).outcome.revenue;
  return result;
}

SuboptimalResult solve_suboptimal(const NetworkInstance& net) {
  net.validate();
  const int n = net.n;
  double g_sum = 0.0;
  for (int i = 0; i < n; ++i) g_sum += net.g[i];

  SuboptimalResult result;
  result.prices.resize(n);
  result.powers.resize(n);
  for (int i = 0; i < n; ++i) {
    double cap = net.i_th >= net.p_max[i] * g_sum ? net.p_max[i] : net.i_th / g_sum;
    result.prices[i] = net.w[i] * net.gain(i, i) / (net.g[i] * (cap * net.gain(i, i) + net.sigma2));
    double target = net.w[i] / (net.g[i] * result.prices[i]) - net.sigma2 / net.gain(i, i);
    result.powers[i] = std::clamp(target, 0.0, net.p_max[i]);
  }
  return result;
}

}  // namespace d2d

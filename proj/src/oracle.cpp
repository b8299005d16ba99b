#include "d2dprice/oracle.hpp"

#include <stdexcept>

#include "d2dprice/game.hpp"
#include "d2dprice/pricing_uniform.hpp"

namespace d2d::oracle {

double grid_ne_check(const NetworkInstance& net, const PriceVector& prices, const PowerVector& p_claim,
                     int grid_points) {
  net.validate();
  if (grid_points < 2) throw std::invalid_argument("grid_points must be >= 2");
  double worst = 0.0;
  bool first = true;
  PowerVector p = p_claim;
  for (int i = 0; i < net.n; ++i) {
    double base = user_payoff(net, p_claim, prices, i);
    double best = 0.0;
    bool have = false;
    for (int k = 0; k < grid_points; ++k) {
      p[i] = net.p_max[i] * static_cast<double>(k) / static_cast<double>(grid_points - 1);
      double gain = user_payoff(net, p, prices, i) - base;
      if (!have || gain > best) {
        have = true;
        best = gain;
      }
    }
    p[i] = p_claim[i];
    if (first || best > worst) {
      first = false;
      worst = best;
    }
  }
  return worst;
}

UniformSearchResult grid_uniform_search(const NetworkInstance& net, int price_grid_points) {
  if (price_grid_points < 2) throw std::invalid_argument("price_grid_points must be >= 2");
  const double upper = price_upper_bound(net);
  UniformSearchResult best;
  bool have = false;
  for (int k = 0; k < price_grid_points; ++k) {
    double price = upper * static_cast<double>(k) / static_cast<double>(price_grid_points - 1);
    NeResult ne = solve_ne(net, PriceVector(static_cast<std::size_t>(net.n), price));
    double interference = total_interference(net, ne.powers);
    if (interference > net.i_th) continue;
    double revenue = price * interference;
    if (!have || revenue >= best.revenue) {
      have = true;
      best = {price, revenue};
    }
  }
  if (!have) throw std::runtime_error("no feasible price found on the grid");
  return best;
}

RevenueSearchResult grid_revenue_max(const NetworkInstance& net, int per_axis_points) {
  net.validate();
  if (net.n > 4) throw std::invalid_argument("grid_revenue_max supports at most 4 users");
  if (per_axis_points < 2) throw std::invalid_argument("per_axis_points must be >= 2");

  const int n = net.n;
  RevenueSearchResult best;
  bool have = false;
  PowerVector p(n, 0.0);
  std::vector<int> idx(n, 0);
  while (true) {
    for (int i = 0; i < n; ++i) {
      p[i] = net.p_max[i] * static_cast<double>(idx[i]) / static_cast<double>(per_axis_points - 1);
    }
    if (total_interference(net, p) <= net.i_th) {
      // Same expression as the differentiated objective, evaluated locally so
      // this search shares no code with the solver it cross-checks.
      double value = 0.0;
      for (int i = 0; i < n; ++i) {
        double denom = net.sigma2;
        for (int j = 0; j < n; ++j) denom += p[j] * net.gain(j, i);
        value += p[i] * net.w[i] * net.gain(i, i) / denom;
      }
      if (!have || value > best.objective) {
        have = true;
        best.powers = p;
        best.objective = value;
      }
    }
    int d = n - 1;
    while (d >= 0 && idx[d] == per_axis_points - 1) {
      idx[d] = 0;
      --d;
    }
    if (d < 0) break;
    ++idx[d];
  }
  if (!have) throw std::runtime_error("no feasible power profile on the grid");
  return best;
}

}  // namespace d2d::oracle

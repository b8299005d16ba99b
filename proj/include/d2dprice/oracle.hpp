#pragma once

#include "d2dprice/model.hpp"

namespace d2d::oracle {

/// Largest payoff gain any single user can realize by deviating from
/// p_claim to one of grid_points equally spaced powers in [0, p_max_i],
/// holding the others fixed. At an equilibrium this is <= 0 up to solver
/// tolerance; the raw value may be negative.
double grid_ne_check(const NetworkInstance& net, const PriceVector& prices, const PowerVector& p_claim,
                     int grid_points);

struct UniformSearchResult {
  double price = 0.0;
  double revenue = 0.0;
};

/// Exhaustive uniform-price search: evaluates the equilibrium at
/// price_grid_points equally spaced prices in [0, price_upper_bound] and
/// returns the feasible revenue maximizer (ties keep the larger price).
UniformSearchResult grid_uniform_search(const NetworkInstance& net, int price_grid_points);

struct RevenueSearchResult {
  PowerVector powers;
  double objective = 0.0;
};

/// Exhaustive search of the differentiated revenue objective over a power
/// grid with per_axis_points points per user, restricted to profiles meeting
/// the interference constraint. Ties keep the lexicographically smallest
/// grid index. Rejects n > 4.
RevenueSearchResult grid_revenue_max(const NetworkInstance& net, int per_axis_points);

}  // namespace d2d::oracle

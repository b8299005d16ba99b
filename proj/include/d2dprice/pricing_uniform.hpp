#pragma once

#include <vector>

#include "d2dprice/game.hpp"
#include "d2dprice/model.hpp"

namespace d2d {

/// Smallest uniform price at which every user's equilibrium power is zero:
/// max_i w_i h_ii / (g_i sigma2).
double price_upper_bound(const NetworkInstance& net);

/// Largest uniform price at which every user still transmits at p_max:
/// min_i w_i h_ii / (g_i (p_max_i h_ii + ipn_i(p_max))).
double price_lower_bound(const NetworkInstance& net);

struct SweepPoint {
  double price = 0.0;
  double revenue = 0.0;
  double interference = 0.0;
};

struct UniformPricingResult {
  double price = 0.0;
  GameOutcome outcome;
  std::vector<SweepPoint> trace;
};

/// Descending search for the revenue-maximizing uniform price. Starting at
/// the upper bound, solves the power game at each candidate, records
/// (price, revenue, interference), and steps down by epsilon until the first
/// candidate whose equilibrium interference exceeds i_th (that candidate is
/// recorded in the trace but is not eligible) or until the next candidate
/// would not exceed the lower bound. Returns the best feasible candidate;
/// ties keep the larger price. epsilon <= 0 selects the default step
/// (upper - lower) / 1000. The first candidate is always feasible, so a
/// result always exists.
UniformPricingResult solve_uniform(const NetworkInstance& net, double epsilon = 0.0);

}  // namespace d2d

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace d2d {

using PowerVector = std::vector<double>;  // per-user transmit powers, linear scale
using PriceVector = std::vector<double>;  // per-user interference prices

/// One realization of a cellular network with n D2D pairs reusing the uplink.
/// All gains are linear channel power gains; h is stored row-major with
/// h[j*n+i] the gain from source j to destination i (so h[i*n+i] is the
/// direct gain of pair i) and g[i] the gain from source i to the base station.
struct NetworkInstance {
  int n = 0;
  std::vector<double> h;
  std::vector<double> g;
  double sigma2 = 1.0;
  std::vector<double> w;
  PowerVector p_max;
  double i_th = 0.0;

  double gain(int src, int dst) const {
    return h[static_cast<std::size_t>(src) * static_cast<std::size_t>(n) + static_cast<std::size_t>(dst)];
  }

  /// Throws std::invalid_argument when a field is missing, mis-sized, or
  /// outside its domain (gains and weights strictly positive, sigma2 and
  /// i_th strictly positive, p_max strictly positive).
  void validate() const;
};

/// Parameters for drawing a random network realization.
struct TopologyConfig {
  int n = 0;
  double cell_radius = 100.0;
  double pair_distance_max = 10.0;
  double path_loss_exponent = 2.0;
  double sigma2 = 1.0;
  double weight = 1.0;
  double p_max_db = 10.0;  // dB value; may be zero or negative (linear value is always positive)
  double i_th = 0.05;
  std::uint64_t seed = 0;

  void validate() const;
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

/// Source/destination coordinates produced by sample_network, with the base
/// station at the origin. Exposed for diagnostics and geometry tests.
struct SampledGeometry {
  std::vector<Vec2> sources;
  std::vector<Vec2> destinations;
};

/// Draws a network realization: sources uniform over the cell disk, each
/// destination at a uniform angle and uniform (0, pair_distance_max] distance
/// from its source, and every gain c * L^-theta with c a unit-mean
/// exponential fade. Distances are clamped below at 1e-3. Deterministic in
/// cfg.seed.
NetworkInstance sample_network(const TopologyConfig& cfg, SampledGeometry* geometry = nullptr);

/// Interference-plus-noise at destination i: sum_{j != i} p[j]*h[j][i] + sigma2.
double ipn(const NetworkInstance& net, const PowerVector& p, int i);

double sinr(const NetworkInstance& net, const PowerVector& p, int i);

/// Achievable rate ln(1 + sinr_i), in nats.
double rate(const NetworkInstance& net, const PowerVector& p, int i);

/// Payoff of user i: w_i * rate_i - p_i * g_i * prices_i.
double user_payoff(const NetworkInstance& net, const PowerVector& p, const PriceVector& prices, int i);

/// Base-station revenue: sum_i p_i * g_i * prices_i.
double bs_revenue(const NetworkInstance& net, const PowerVector& p, const PriceVector& prices);

/// Total interference at the base station: sum_i p_i * g_i.
double total_interference(const NetworkInstance& net, const PowerVector& p);

/// True when 0 <= p_i <= p_max_i for all users.
bool is_feasible_power(const NetworkInstance& net, const PowerVector& p);

/// A solved operating point with its per-user and aggregate metrics.
struct GameOutcome {
  PowerVector powers;
  PriceVector prices;
  std::vector<double> rates;
  std::vector<double> payoffs;
  double revenue = 0.0;
  double total_interference = 0.0;
  int iterations = 0;
  bool converged = false;
};

GameOutcome make_outcome(const NetworkInstance& net, const PowerVector& p, const PriceVector& prices,
                         int iterations, bool converged);

}  // namespace d2d

#include "d2dprice/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "d2dprice/rng.hpp"

namespace d2d {

namespace {

void check_index(const NetworkInstance& net, int i) {
  if (i < 0 || i >= net.n) {
    throw std::out_of_range("user index " + std::to_string(i) + " out of range for n=" + std::to_string(net.n));
  }
}

void check_sized(const NetworkInstance& net, const std::vector<double>& v, const char* name) {
  if (static_cast<int>(v.size()) != net.n) {
    throw std::invalid_argument(std::string(name) + " has size " + std::to_string(v.size()) +
                                ", expected " + std::to_string(net.n));
  }
}

bool all_positive_finite(const std::vector<double>& v) {
  for (double x : v) {
    if (!(x > 0.0) || !std::isfinite(x)) return false;
  }
  return true;
}

double clamped_distance(Vec2 a, Vec2 b) {
  double d = std::hypot(a.x - b.x, a.y - b.y);
  return d < 1e-3 ? 1e-3 : d;
}

}  // namespace

void NetworkInstance::validate() const {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (h.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw std::invalid_argument("h must have n*n entries");
  }
  if (!all_positive_finite(h)) throw std::invalid_argument("h entries must be finite and > 0");
  check_sized(*this, g, "g");
  if (!all_positive_finite(g)) throw std::invalid_argument("g entries must be finite and > 0");
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) throw std::invalid_argument("sigma2 must be finite and > 0");
  check_sized(*this, w, "w");
  if (!all_positive_finite(w)) throw std::invalid_argument("w entries must be finite and > 0");
  check_sized(*this, p_max, "p_max");
  if (!all_positive_finite(p_max)) throw std::invalid_argument("p_max entries must be finite and > 0");
  if (!(i_th > 0.0) || !std::isfinite(i_th)) throw std::invalid_argument("i_th must be finite and > 0");
}

void TopologyConfig::validate() const {
  if (n < 1) throw std::invalid_argument("topology: n must be >= 1");
  if (!(cell_radius > 0.0) || !std::isfinite(cell_radius)) throw std::invalid_argument("topology: cell_radius must be > 0");
  if (!(pair_distance_max > 0.0) || !std::isfinite(pair_distance_max)) {
    throw std::invalid_argument("topology: pair_distance_max must be > 0");
  }
  if (!(path_loss_exponent > 0.0) || !std::isfinite(path_loss_exponent)) {
    throw std::invalid_argument("topology: path_loss_exponent must be > 0");
  }
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) throw std::invalid_argument("topology: sigma2 must be > 0");
  if (!(weight > 0.0) || !std::isfinite(weight)) throw std::invalid_argument("topology: weight must be > 0");
  if (!std::isfinite(p_max_db)) throw std::invalid_argument("topology: p_max_db must be finite");
  if (!(i_th > 0.0) || !std::isfinite(i_th)) throw std::invalid_argument("topology: i_th must be > 0");
}

NetworkInstance sample_network(const TopologyConfig& cfg, SampledGeometry* geometry) {
  cfg.validate();
  const int n = cfg.n;
  const double theta = cfg.path_loss_exponent;
  Rng rng(cfg.seed);

  std::vector<Vec2> src(n), dst(n);
  for (int i = 0; i < n; ++i) {
    double r = cfg.cell_radius * std::sqrt(rng.uniform01());
    double phi = 2.0 * std::numbers::pi * rng.uniform01();
    src[i] = {r * std::cos(phi), r * std::sin(phi)};
    double d = cfg.pair_distance_max * rng.uniform01_high();
    double psi = 2.0 * std::numbers::pi * rng.uniform01();
    dst[i] = {src[i].x + d * std::cos(psi), src[i].y + d * std::sin(psi)};
  }

  NetworkInstance net;
  net.n = n;
  net.h.resize(static_cast<std::size_t>(n) * n);
  net.g.resize(n);
  net.sigma2 = cfg.sigma2;
  net.w.assign(n, cfg.weight);
  net.p_max.assign(n, std::pow(10.0, cfg.p_max_db / 10.0));
  net.i_th = cfg.i_th;

  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      double L = clamped_distance(src[j], dst[i]);
      net.h[static_cast<std::size_t>(j) * n + i] = rng.exponential() * std::pow(L, -theta);
    }
  }
  const Vec2 bs{0.0, 0.0};
  for (int i = 0; i < n; ++i) {
    double L = clamped_distance(src[i], bs);
    net.g[i] = rng.exponential() * std::pow(L, -theta);
  }

  if (geometry) {
    geometry->sources = std::move(src);
    geometry->destinations = std::move(dst);
  }
  net.validate();
  return net;
}

double ipn(const NetworkInstance& net, const PowerVector& p, int i) {
  check_index(net, i);
  check_sized(net, p, "p");
  double acc = net.sigma2;
  for (int j = 0; j < net.n; ++j) {
    if (j != i) acc += p[j] * net.gain(j, i);
  }
  return acc;
}

double sinr(const NetworkInstance& net, const PowerVector& p, int i) {
  return p[static_cast<std::size_t>(i)] * net.gain(i, i) / ipn(net, p, i);
}

double rate(const NetworkInstance& net, const PowerVector& p, int i) {
  return std::log(1.0 + sinr(net, p, i));
}

double user_payoff(const NetworkInstance& net, const PowerVector& p, const PriceVector& prices, int i) {
  check_index(net, i);
  check_sized(net, prices, "prices");
  return net.w[i] * rate(net, p, i) - p[i] * net.g[i] * prices[i];
}

double bs_revenue(const NetworkInstance& net, const PowerVector& p, const PriceVector& prices) {
  check_sized(net, p, "p");
  check_sized(net, prices, "prices");
  double acc = 0.0;
  for (int i = 0; i < net.n; ++i) acc += p[i] * net.g[i] * prices[i];
  return acc;
}

double total_interference(const NetworkInstance& net, const PowerVector& p) {
  check_sized(net, p, "p");
  double acc = 0.0;
  for (int i = 0; i < net.n; ++i) acc += p[i] * net.g[i];
  return acc;
}

bool is_feasible_power(const NetworkInstance& net, const PowerVector& p) {
  if (static_cast<int>(p.size()) != net.n) return false;
  for (int i = 0; i < net.n; ++i) {
    if (!(p[i] >= 0.0) || !(p[i] <= net.p_max[i])) return false;
  }
  return true;
}

GameOutcome make_outcome(const NetworkInstance& net, const PowerVector& p, const PriceVector& prices,
                         int iterations, bool converged) {
  GameOutcome out;
  out.powers = p;
  out.prices = prices;
  out.rates.resize(net.n);
  out.payoffs.resize(net.n);
  for (int i = 0; i < net.n; ++i) {
    out.rates[i] = rate(net, p, i);
    out.payoffs[i] = user_payoff(net, p, prices, i);
  }
  out.revenue = bs_revenue(net, p, prices);
  out.total_interference = total_interference(net, p);
  out.iterations = iterations;
  out.converged = converged;
  return out;
}

}  // namespace d2d

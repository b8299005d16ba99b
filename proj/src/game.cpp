#include "d2dprice/game.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace d2d {

namespace {

void check_prices(const NetworkInstance& net, const PriceVector& prices) {
  if (static_cast<int>(prices.size()) != net.n) throw std::invalid_argument("prices must have n entries");
  for (double q : prices) {
    if (!(q >= 0.0) || !std::isfinite(q)) throw std::invalid_argument("prices must be finite and >= 0");
  }
}

}  // namespace

double best_response(const NetworkInstance& net, const PowerVector& p, const PriceVector& prices, int i) {
  if (prices[static_cast<std::size_t>(i)] == 0.0) return net.p_max[i];
  double target = net.w[i] / (net.g[i] * prices[i]) - ipn(net, p, i) / net.gain(i, i);
  return std::clamp(target, 0.0, net.p_max[i]);
}

PowerVector best_response_map(const NetworkInstance& net, const PowerVector& p, const PriceVector& prices) {
  PowerVector next(net.n);
  for (int i = 0; i < net.n; ++i) next[i] = best_response(net, p, prices, i);
  return next;
}

NeResult solve_ne(const NetworkInstance& net, const PriceVector& prices, const PowerVector& p0,
                  double tol, int max_iter, std::vector<PowerVector>* trace) {
  net.validate();
  check_prices(net, prices);
  if (!is_feasible_power(net, p0)) throw std::invalid_argument("p0 must satisfy 0 <= p0 <= p_max");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");
  if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");

  PowerVector p = p0;
  if (trace) {
    trace->clear();
    trace->push_back(p);
  }
  double residual = 0.0;
  for (int t = 1; t <= max_iter; ++t) {
    PowerVector q = best_response_map(net, p, prices);
    residual = 0.0;
    for (int i = 0; i < net.n; ++i) residual = std::max(residual, std::fabs(q[i] - p[i]));
    p = std::move(q);
    if (trace) trace->push_back(p);
    if (residual <= tol) return {std::move(p), t, true, residual};
  }
  return {std::move(p), max_iter, false, residual};
}

NeResult solve_ne(const NetworkInstance& net, const PriceVector& prices) {
  return solve_ne(net, prices, PowerVector(static_cast<std::size_t>(net.n), 0.0));
}

}  // namespace d2d

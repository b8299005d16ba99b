#include "d2dprice/pricing_uniform.hpp"

#include <algorithm>
#include <stdexcept>

namespace d2d {

double price_upper_bound(const NetworkInstance& net) {
  net.validate();
  double best = 0.0;
  for (int i = 0; i < net.n; ++i) {
    best = std::max(best, net.w[i] * net.gain(i, i) / (net.g[i] * net.sigma2));
  }
  return best;
}

double price_lower_bound(const NetworkInstance& net) {
  net.validate();
  double best = 0.0;
  for (int i = 0; i < net.n; ++i) {
    double denom = net.p_max[i] * net.gain(i, i) + ipn(net, net.p_max, i);
    double v = net.w[i] * net.gain(i, i) / (net.g[i] * denom);
    if (i == 0 || v < best) best = v;
  }
  return best;
}

UniformPricingResult solve_uniform(const NetworkInstance& net, double epsilon) {
  const double upper = price_upper_bound(net);
  const double lower = price_lower_bound(net);
  const double eps = epsilon > 0.0 ? epsilon : (upper - lower) / 1000.0;
  if (!(eps > 0.0)) throw std::invalid_argument("epsilon must be > 0");

  UniformPricingResult result;
  double best_price = upper;
  double best_revenue = -1.0;
  NeResult best_ne;

  double price = upper;
  while (true) {
    NeResult ne = solve_ne(net, PriceVector(static_cast<std::size_t>(net.n), price));
    double interference = total_interference(net, ne.powers);
    double revenue = price * interference;
    result.trace.push_back({price, revenue, interference});
    if (interference > net.i_th) break;
    if (revenue > best_revenue) {
      best_revenue = revenue;
      best_price = price;
      best_ne = std::move(ne);
    }
    double next = price - eps;
    if (next <= lower) break;
    price = next;
  }

  result.price = best_price;
  result.outcome = make_outcome(net, best_ne.powers,
                                PriceVector(static_cast<std::size_t>(net.n), best_price),
                                best_ne.iterations, best_ne.converged);
  return result;
}

}  // namespace d2d

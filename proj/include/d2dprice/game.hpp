#pragma once

#include <vector>

#include "d2dprice/model.hpp"

namespace d2d {

inline constexpr double kNeTol = 1e-8;
inline constexpr int kNeMaxIter = 10000;

struct NeResult {
  PowerVector powers;
  int iterations = 0;
  bool converged = false;
  double residual = 0.0;  // last sup-norm step size
};

/// Best response of user i to the other users' powers at the given prices:
/// clamp(w_i / (g_i * prices_i) - ipn_i / h_ii, 0, p_max_i). A zero price
/// yields p_max_i.
double best_response(const NetworkInstance& net, const PowerVector& p, const PriceVector& prices, int i);

/// Simultaneous best response of all users.
PowerVector best_response_map(const NetworkInstance& net, const PowerVector& p, const PriceVector& prices);

/// Fixed-point (Jacobi) iteration of the best-response map from p0 until the
/// sup-norm step falls to tol or max_iter sweeps have run. When trace is
/// non-null it receives p0 followed by every iterate, so its length is
/// iterations + 1.
NeResult solve_ne(const NetworkInstance& net, const PriceVector& prices, const PowerVector& p0,
                  double tol = kNeTol, int max_iter = kNeMaxIter,
                  std::vector<PowerVector>* trace = nullptr);

/// Same, starting from the all-zero power profile.
NeResult solve_ne(const NetworkInstance& net, const PriceVector& prices);

}  // namespace d2d

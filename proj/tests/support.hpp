#pragma once

#include <cstdint>

#include "d2dprice/model.hpp"

namespace testsupport {

// Two pairs with mild cross interference and an expensive second uplink.
// Worked equilibrium at uniform price 0.1: solving the interior system
//   p0 = 9 - 0.2 p1,  p1 = 4 - 0.1 p0
// gives p0 = 8.36734693877551, p1 = 3.163265306122449. Price bounds are
// upper = 1 and lower = 1/24.
inline d2d::NetworkInstance two_user(double i_th = 4.0) {
  d2d::NetworkInstance net;
  net.n = 2;
  net.h = {1.0, 0.1, 0.2, 1.0};
  net.g = {1.0, 2.0};
  net.sigma2 = 1.0;
  net.w = {1.0, 1.0};
  net.p_max = {10.0, 10.0};
  net.i_th = i_th;
  return net;
}

// One pair with unit gains and cap 10. The best uniform price is 1/11 when
// the interference budget is slack (revenue 10/11) and 1/6 at i_th = 5
// (revenue 5/6); the closed-form and LP schemes hit those values exactly.
inline d2d::NetworkInstance single_user(double i_th) {
  d2d::NetworkInstance net;
  net.n = 1;
  net.h = {1.0};
  net.g = {1.0};
  net.sigma2 = 1.0;
  net.w = {1.0};
  net.p_max = {10.0};
  net.i_th = i_th;
  return net;
}

inline d2d::TopologyConfig desk_topology(int n, std::uint64_t seed, double p_max_db = 10.0,
                                         double i_th = 0.05) {
  d2d::TopologyConfig cfg;
  cfg.n = n;
  cfg.p_max_db = p_max_db;
  cfg.i_th = i_th;
  cfg.seed = seed;
  return cfg;
}

}  // namespace testsupport

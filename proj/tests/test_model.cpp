#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "d2dprice/model.hpp"
#include "support.hpp"

using namespace d2d;
using testsupport::single_user;
using testsupport::two_user;

TEST_CASE("network validation rejects malformed instances") {
  NetworkInstance net = two_user();
  CHECK_NOTHROW(net.validate());

  NetworkInstance bad = net;
  bad.n = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  bad = net;
  bad.h.pop_back();
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  bad = net;
  bad.h[1] = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  bad = net;
  bad.g = {1.0};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  bad = net;
  bad.sigma2 = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  bad = net;
  bad.w[0] = -1.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  bad = net;
  bad.p_max[1] = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  bad = net;
  bad.i_th = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  bad = net;
  bad.h[0] = std::nan("");
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("gain indexing is source-major") {
  NetworkInstance net = two_user();
  CHECK(net.gain(0, 0) == 1.0);
  CHECK(net.gain(0, 1) == 0.1);
  CHECK(net.gain(1, 0) == 0.2);
  CHECK(net.gain(1, 1) == 1.0);
}

TEST_CASE("point metrics at a worked operating point") {
  NetworkInstance net = two_user();
  PowerVector p{2.0, 1.0};
  PriceVector prices{0.3, 0.4};

  CHECK(ipn(net, p, 0) == doctest::Approx(1.2).epsilon(1e-14));
  CHECK(ipn(net, p, 1) == doctest::Approx(1.2).epsilon(1e-14));
  CHECK(sinr(net, p, 0) == doctest::Approx(2.0 / 1.2).epsilon(1e-14));
  CHECK(rate(net, p, 1) == doctest::Approx(std::log(1.0 + 1.0 / 1.2)).epsilon(1e-14));
  CHECK(user_payoff(net, p, prices, 0) ==
        doctest::Approx(std::log(1.0 + 2.0 / 1.2) - 0.6).epsilon(1e-13));
  CHECK(bs_revenue(net, p, prices) == doctest::Approx(1.4).epsilon(1e-14));
  CHECK(total_interference(net, p) == 4.0);
}

TEST_CASE("metric argument checks") {
  NetworkInstance net = two_user();
  PowerVector p{2.0, 1.0};
  CHECK_THROWS_AS(ipn(net, p, 2), std::out_of_range);
  CHECK_THROWS_AS(ipn(net, p, -1), std::out_of_range);
  CHECK_THROWS_AS(ipn(net, PowerVector{1.0}, 0), std::invalid_argument);
  CHECK_THROWS_AS(bs_revenue(net, p, PriceVector{0.1}), std::invalid_argument);
}

TEST_CASE("power feasibility is the box check") {
  NetworkInstance net = two_user();
  CHECK(is_feasible_power(net, {0.0, 0.0}));
  CHECK(is_feasible_power(net, {10.0, 10.0}));
  CHECK_FALSE(is_feasible_power(net, {10.0 + 1e-9, 0.0}));
  CHECK_FALSE(is_feasible_power(net, {-1e-12, 0.0}));
  CHECK_FALSE(is_feasible_power(net, {1.0}));
  CHECK_FALSE(is_feasible_power(net, {std::nan(""), 0.0}));
}

TEST_CASE("outcome aggregates recompute from its own fields") {
  NetworkInstance net = two_user();
  PowerVector p{2.0, 1.0};
  PriceVector prices{0.3, 0.4};
  GameOutcome out = make_outcome(net, p, prices, 5, true);
  CHECK(out.powers == p);
  CHECK(out.prices == prices);
  CHECK(out.rates.size() == 2);
  CHECK(out.payoffs.size() == 2);
  CHECK(out.revenue == bs_revenue(net, out.powers, out.prices));
  CHECK(out.total_interference == total_interference(net, out.powers));
  CHECK(out.iterations == 5);
  CHECK(out.converged);
}

TEST_CASE("topology validation") {
  TopologyConfig cfg = testsupport::desk_topology(4, 1);
  CHECK_NOTHROW(cfg.validate());
  cfg.p_max_db = -10.0;  // negative dB is a legal sub-unit linear cap
  CHECK_NOTHROW(cfg.validate());

  TopologyConfig bad = cfg;
  bad.n = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.cell_radius = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.i_th = -1.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.p_max_db = std::nan("");
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("sampling is deterministic in the seed") {
  TopologyConfig cfg = testsupport::desk_topology(6, 99);
  SampledGeometry geo_a, geo_b;
  NetworkInstance a = sample_network(cfg, &geo_a);
  NetworkInstance b = sample_network(cfg, &geo_b);
  CHECK(a.h == b.h);
  CHECK(a.g == b.g);
  for (int i = 0; i < cfg.n; ++i) {
    CHECK(geo_a.sources[i].x == geo_b.sources[i].x);
    CHECK(geo_a.destinations[i].y == geo_b.destinations[i].y);
  }

  cfg.seed = 100;
  NetworkInstance c = sample_network(cfg);
  CHECK(a.h != c.h);
}

TEST_CASE("sampled geometry stays inside the configured cell") {
  TopologyConfig cfg = testsupport::desk_topology(40, 7);
  SampledGeometry geo;
  NetworkInstance net = sample_network(cfg, &geo);
  net.validate();
  CHECK(net.p_max[0] == doctest::Approx(10.0).epsilon(1e-15));
  CHECK(net.w[39] == 1.0);
  for (int i = 0; i < cfg.n; ++i) {
    double r = std::hypot(geo.sources[i].x, geo.sources[i].y);
    CHECK(r <= cfg.cell_radius + 1e-9);
    double d = std::hypot(geo.sources[i].x - geo.destinations[i].x,
                          geo.sources[i].y - geo.destinations[i].y);
    CHECK(d > 0.0);
    CHECK(d <= cfg.pair_distance_max + 1e-9);
  }
}

TEST_CASE("direct links dominate cross links on average") {
  TopologyConfig cfg = testsupport::desk_topology(30, 3);
  NetworkInstance net = sample_network(cfg);
  double direct = 0.0, cross = 0.0;
  int cross_count = 0;
  for (int j = 0; j < net.n; ++j) {
    for (int i = 0; i < net.n; ++i) {
      if (i == j) {
        direct += net.gain(j, i);
      } else {
        cross += net.gain(j, i);
        ++cross_count;
      }
    }
  }
  direct /= net.n;
  cross /= cross_count;
  CHECK(direct > 10.0 * cross);
}

TEST_CASE("negative dB cap maps below one") {
  TopologyConfig cfg = testsupport::desk_topology(2, 5, -10.0);
  NetworkInstance net = sample_network(cfg);
  CHECK(net.p_max[0] == doctest::Approx(0.1).epsilon(1e-15));
}

TEST_CASE("single user instance sanity") {
  NetworkInstance net = single_user(5.0);
  CHECK_NOTHROW(net.validate());
  CHECK(ipn(net, {3.0}, 0) == 1.0);
}

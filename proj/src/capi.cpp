#include "d2dprice.h"

#include <cstring>
#include <exception>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include <json.hpp>

#include "d2dprice/game.hpp"
#include "d2dprice/model.hpp"
#include "d2dprice/pricing_differentiated.hpp"
#include "d2dprice/pricing_uniform.hpp"
#include "d2dprice/scenario.hpp"
#include "d2dprice/version.hpp"

struct d2d_network {
  d2d::NetworkInstance net;
};

namespace {

thread_local std::string g_last_error;

d2d_status set_error(d2d_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

d2d_status ok() {
  g_last_error.clear();
  return D2D_OK;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
d2d_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const d2d::ConfigError& e) {
    return set_error(D2D_ERR_CONFIG, e.what());
  } catch (const d2d::IoError& e) {
    return set_error(D2D_ERR_IO, e.what());
  } catch (const std::invalid_argument& e) {
    return set_error(D2D_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return set_error(D2D_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::runtime_error& e) {
    return set_error(D2D_ERR_SOLVER, e.what());
  } catch (const std::bad_alloc&) {
    return set_error(D2D_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(D2D_ERR_INTERNAL, e.what());
  }
}

d2d_status check_handle(const d2d_network* net) {
  if (!net) return set_error(D2D_ERR_INVALID_ARGUMENT, "network handle is NULL");
  return D2D_OK;
}

std::vector<double> to_vector(const double* data, int n) {
  return std::vector<double>(data, data + n);
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

d2d_status run_scenario_impl(const d2d::ScenarioConfig& cfg, const char* out_dir,
                             const uint64_t* seed, const int* trials, int full_trials,
                             char** report_json) {
  d2d::RunOverrides ov;
  if (out_dir) ov.out_dir = out_dir;
  if (seed) ov.seed = *seed;
  if (trials) ov.trials = *trials;
  ov.full_trials = full_trials != 0;
  d2d::RunReport report = d2d::run_scenario(cfg, ov);
  if (report_json) {
    nlohmann::json j{
        {"csv", report.csv_path},
        {"meta", report.meta_path},
        {"rows", report.rows},
        {"excluded_trials", report.excluded.size()},
    };
    *report_json = dup_string(j.dump());
  }
  return ok();
}

}  // namespace

extern "C" {

const char* d2d_version(void) { return d2d::kLibraryVersion; }

const char* d2d_last_error(void) { return g_last_error.c_str(); }

d2d_status d2d_network_create(int n, const double* h, const double* g, double sigma2,
                              const double* w, const double* p_max, double i_th,
                              d2d_network** out) {
  return guarded([&]() -> d2d_status {
    if (!out) return set_error(D2D_ERR_INVALID_ARGUMENT, "out pointer is NULL");
    if (n < 1) return set_error(D2D_ERR_INVALID_ARGUMENT, "n must be >= 1");
    if (!h || !g || !w || !p_max) return set_error(D2D_ERR_INVALID_ARGUMENT, "array argument is NULL");
    d2d::NetworkInstance net;
    net.n = n;
    net.h = to_vector(h, n * n);
    net.g = to_vector(g, n);
    net.sigma2 = sigma2;
    net.w = to_vector(w, n);
    net.p_max = to_vector(p_max, n);
    net.i_th = i_th;
    net.validate();
    *out = new d2d_network{std::move(net)};
    return ok();
  });
}

d2d_status d2d_network_sample(const char* topology_json, d2d_network** out) {
  return guarded([&]() -> d2d_status {
    if (!out) return set_error(D2D_ERR_INVALID_ARGUMENT, "out pointer is NULL");
    if (!topology_json) return set_error(D2D_ERR_INVALID_ARGUMENT, "topology_json is NULL");
    // Reuse the scenario config parser so topology documents are validated
    // the same way everywhere.
    std::string wrapped = std::string("{\"scenario\":\"convergence\",\"output_path\":\"x.csv\",\"topology\":") +
                          topology_json + "}";
    d2d::ScenarioConfig cfg = d2d::parse_scenario_config(wrapped, "topology");
    *out = new d2d_network{d2d::sample_network(cfg.topology)};
    return ok();
  });
}

void d2d_network_free(d2d_network* net) { delete net; }

int d2d_network_size(const d2d_network* net) { return net ? net->net.n : -1; }

d2d_status d2d_network_export(const d2d_network* net, double* h, double* g, double* sigma2,
                              double* w, double* p_max, double* i_th) {
  return guarded([&]() -> d2d_status {
    if (d2d_status s = check_handle(net)) return s;
    const auto& m = net->net;
    const std::size_t n = static_cast<std::size_t>(m.n);
    if (h) std::memcpy(h, m.h.data(), n * n * sizeof(double));
    if (g) std::memcpy(g, m.g.data(), n * sizeof(double));
    if (sigma2) *sigma2 = m.sigma2;
    if (w) std::memcpy(w, m.w.data(), n * sizeof(double));
    if (p_max) std::memcpy(p_max, m.p_max.data(), n * sizeof(double));
    if (i_th) *i_th = m.i_th;
    return ok();
  });
}

d2d_status d2d_metrics(const d2d_network* net, const double* powers, const double* prices,
                       double* rates, double* payoffs, double* revenue, double* interference) {
  return guarded([&]() -> d2d_status {
    if (d2d_status s = check_handle(net)) return s;
    if (!powers || !prices) return set_error(D2D_ERR_INVALID_ARGUMENT, "powers/prices is NULL");
    const auto& m = net->net;
    d2d::GameOutcome out = d2d::make_outcome(m, to_vector(powers, m.n), to_vector(prices, m.n), 0, true);
    if (rates) std::memcpy(rates, out.rates.data(), out.rates.size() * sizeof(double));
    if (payoffs) std::memcpy(payoffs, out.payoffs.data(), out.payoffs.size() * sizeof(double));
    if (revenue) *revenue = out.revenue;
    if (interference) *interference = out.total_interference;
    return ok();
  });
}

d2d_status d2d_solve_ne(const d2d_network* net, const double* prices, const double* p0,
                        double tol, int max_iter, double* powers, int* iterations,
                        int* converged, double* residual) {
  return guarded([&]() -> d2d_status {
    if (d2d_status s = check_handle(net)) return s;
    if (!prices) return set_error(D2D_ERR_INVALID_ARGUMENT, "prices is NULL");
    const auto& m = net->net;
    std::vector<double> start = p0 ? to_vector(p0, m.n) : std::vector<double>(m.n, 0.0);
    d2d::NeResult ne = d2d::solve_ne(m, to_vector(prices, m.n), start,
                                     tol > 0.0 ? tol : d2d::kNeTol,
                                     max_iter > 0 ? max_iter : d2d::kNeMaxIter);
    if (powers) std::memcpy(powers, ne.powers.data(), ne.powers.size() * sizeof(double));
    if (iterations) *iterations = ne.iterations;
    if (converged) *converged = ne.converged ? 1 : 0;
    if (residual) *residual = ne.residual;
    return ok();
  });
}

d2d_status d2d_price_bounds(const d2d_network* net, double* lower, double* upper) {
  return guarded([&]() -> d2d_status {
    if (d2d_status s = check_handle(net)) return s;
    if (lower) *lower = d2d::price_lower_bound(net->net);
    if (upper) *upper = d2d::price_upper_bound(net->net);
    return ok();
  });
}

d2d_status d2d_solve_uniform(const d2d_network* net, double epsilon, double* price,
                             double* powers, double* revenue, double* interference) {
  return guarded([&]() -> d2d_status {
    if (d2d_status s = check_handle(net)) return s;
    d2d::UniformPricingResult res = d2d::solve_uniform(net->net, epsilon);
    if (price) *price = res.price;
    if (powers) std::memcpy(powers, res.outcome.powers.data(), res.outcome.powers.size() * sizeof(double));
    if (revenue) *revenue = res.outcome.revenue;
    if (interference) *interference = res.outcome.total_interference;
    return ok();
  });
}

d2d_status d2d_solve_differentiated(const d2d_network* net, int cross_term, double* prices,
                                    double* powers, double* objective, d2d_lp_status* lp_status,
                                    double* fixed_point_residual, int* original_feasible,
                                    double* revenue_vs_uniform) {
  return guarded([&]() -> d2d_status {
    if (d2d_status s = check_handle(net)) return s;
    d2d::DiffPricingResult res =
        d2d::solve_optimal(net->net, cross_term ? d2d::LpMode::cross_term : d2d::LpMode::as_written);
    if (prices) std::memcpy(prices, res.prices.data(), res.prices.size() * sizeof(double));
    if (powers) std::memcpy(powers, res.powers.data(), res.powers.size() * sizeof(double));
    if (objective) *objective = res.objective;
    if (lp_status) *lp_status = static_cast<d2d_lp_status>(res.lp_status);
    if (fixed_point_residual) *fixed_point_residual = res.verification.fixed_point_residual;
    if (original_feasible) *original_feasible = res.verification.original_feasible ? 1 : 0;
    if (revenue_vs_uniform) *revenue_vs_uniform = res.verification.revenue_vs_uniform;
    return ok();
  });
}

d2d_status d2d_solve_suboptimal(const d2d_network* net, double* prices, double* powers) {
  return guarded([&]() -> d2d_status {
    if (d2d_status s = check_handle(net)) return s;
    d2d::SuboptimalResult res = d2d::solve_suboptimal(net->net);
    if (prices) std::memcpy(prices, res.prices.data(), res.prices.size() * sizeof(double));
    if (powers) std::memcpy(powers, res.powers.data(), res.powers.size() * sizeof(double));
    return ok();
  });
}

d2d_status d2d_run_scenario_json(const char* config_json, const char* out_dir,
                                 const uint64_t* seed, const int* trials, int full_trials,
                                 char** report_json) {
  return guarded([&]() -> d2d_status {
    if (!config_json) return set_error(D2D_ERR_INVALID_ARGUMENT, "config_json is NULL");
    d2d::ScenarioConfig cfg = d2d::parse_scenario_config(config_json, "config");
    return run_scenario_impl(cfg, out_dir, seed, trials, full_trials, report_json);
  });
}

d2d_status d2d_run_scenario_file(const char* config_path, const char* out_dir,
                                 const uint64_t* seed, const int* trials, int full_trials,
                                 char** report_json) {
  return guarded([&]() -> d2d_status {
    if (!config_path) return set_error(D2D_ERR_INVALID_ARGUMENT, "config_path is NULL");
    std::ifstream in(config_path, std::ios::binary);
    if (!in) return set_error(D2D_ERR_IO, std::string("cannot read ") + config_path);
    std::ostringstream text;
    text << in.rdbuf();
    d2d::ScenarioConfig cfg = d2d::parse_scenario_config(text.str(), config_path);
    return run_scenario_impl(cfg, out_dir, seed, trials, full_trials, report_json);
  });
}

int d2d_preset_count(void) { return static_cast<int>(d2d::presets().size()); }

const char* d2d_preset_name(int index) {
  const auto& list = d2d::presets();
  if (index < 0 || index >= static_cast<int>(list.size())) return nullptr;
  return list[static_cast<std::size_t>(index)].name.c_str();
}

const char* d2d_preset_summary(int index) {
  const auto& list = d2d::presets();
  if (index < 0 || index >= static_cast<int>(list.size())) return nullptr;
  return list[static_cast<std::size_t>(index)].summary.c_str();
}

d2d_status d2d_preset_config_json(const char* name, char** json_out) {
  return guarded([&]() -> d2d_status {
    if (!name || !json_out) return set_error(D2D_ERR_INVALID_ARGUMENT, "argument is NULL");
    const d2d::Preset* p = d2d::find_preset(name);
    if (!p) return set_error(D2D_ERR_INVALID_ARGUMENT, std::string("unknown preset \"") + name + "\"");
    *json_out = dup_string(d2d::scenario_config_to_json(p->config));
    return ok();
  });
}

void d2d_string_free(char* s) { delete[] s; }

}  // extern "C"

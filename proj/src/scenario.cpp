#include "d2dprice/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "d2dprice/format.hpp"
#include "d2dprice/game.hpp"
#include "d2dprice/pricing_differentiated.hpp"
#include "d2dprice/pricing_uniform.hpp"
#include "d2dprice/rng.hpp"
#include "d2dprice/version.hpp"

namespace d2d {

using nlohmann::json;

const char* to_string(Scenario s) {
  switch (s) {
    case Scenario::convergence: return "convergence";
    case Scenario::uniform_sweep: return "uniform_sweep";
    case Scenario::active_users_vs_price: return "active_users_vs_price";
    case Scenario::compare_snr: return "compare_snr";
    case Scenario::compare_ith: return "compare_ith";
  }
  return "unknown";
}

Scenario scenario_from_string(std::string_view name) {
  if (name == "convergence") return Scenario::convergence;
  if (name == "uniform_sweep") return Scenario::uniform_sweep;
  if (name == "active_users_vs_price") return Scenario::active_users_vs_price;
  if (name == "compare_snr") return Scenario::compare_snr;
  if (name == "compare_ith") return Scenario::compare_ith;
  throw ConfigError("unknown scenario \"" + std::string(name) + "\"");
}

void ScenarioConfig::validate() const {
  topology.validate();
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (trials_full < 1) throw std::invalid_argument("trials_full must be >= 1");
  if (!std::isfinite(sweep.from) || !std::isfinite(sweep.to)) {
    throw std::invalid_argument("sweep bounds must be finite");
  }
  if (!(sweep.to > sweep.from)) throw std::invalid_argument("sweep.to must exceed sweep.from");
  if (sweep.points < 2) throw std::invalid_argument("sweep.points must be >= 2");
  if (!(price_factor > 0.0) || !std::isfinite(price_factor)) {
    throw std::invalid_argument("price_factor must be > 0");
  }
  if (output_path.empty()) throw std::invalid_argument("output_path must be set");
  if ((scenario == Scenario::uniform_sweep || scenario == Scenario::active_users_vs_price) &&
      sweep.from < 0.0) {
    throw std::invalid_argument("price sweep must start at a multiplier >= 0");
  }
  if (scenario == Scenario::compare_ith && !(sweep.from > 0.0)) {
    throw std::invalid_argument("i_th sweep must start above 0");
  }
}

namespace {

[[noreturn]] void fail(const std::string& context, const std::string& message) {
  throw ConfigError(context.empty() ? message : context + ": " + message);
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& context, const char* where) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* key : allowed) {
      if (item.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) fail(context, std::string(where) + " has unknown key \"" + item.key() + "\"");
  }
}

double get_number(const json& obj, const char* key, double fallback, const std::string& context) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number()) fail(context, std::string(key) + " must be a number");
  return obj[key].get<double>();
}

int get_int(const json& obj, const char* key, int fallback, const std::string& context) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number_integer()) fail(context, std::string(key) + " must be an integer");
  return obj[key].get<int>();
}

json topology_to_json(const TopologyConfig& t) {
  return json{
      {"n", t.n},
      {"cell_radius", t.cell_radius},
      {"pair_distance_max", t.pair_distance_max},
      {"path_loss_exponent", t.path_loss_exponent},
      {"sigma2", t.sigma2},
      {"weight", t.weight},
      {"p_max_db", t.p_max_db},
      {"i_th", t.i_th},
      {"seed", t.seed},
  };
}

json config_to_json_obj(const ScenarioConfig& cfg) {
  return json{
      {"scenario", to_string(cfg.scenario)},
      {"topology", topology_to_json(cfg.topology)},
      {"trials", cfg.trials},
      {"trials_full", cfg.trials_full},
      {"sweep", json{{"from", cfg.sweep.from}, {"to", cfg.sweep.to}, {"points", cfg.sweep.points}}},
      {"price_factor", cfg.price_factor},
      {"output_path", cfg.output_path},
  };
}

}  // namespace

ScenarioConfig parse_scenario_config(const std::string& json_text, const std::string& context) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(context, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail(context, "top-level value must be an object");
  reject_unknown_keys(j, {"scenario", "topology", "trials", "trials_full", "sweep", "price_factor", "output_path"},
                      context, "config");

  ScenarioConfig cfg;
  if (!j.contains("scenario") || !j["scenario"].is_string()) fail(context, "scenario must be a string");
  try {
    cfg.scenario = scenario_from_string(j["scenario"].get<std::string>());
  } catch (const ConfigError& e) {
    fail(context, e.what());
  }

  if (!j.contains("topology") || !j["topology"].is_object()) fail(context, "topology must be an object");
  const json& t = j["topology"];
  reject_unknown_keys(t,
                      {"n", "cell_radius", "pair_distance_max", "path_loss_exponent", "sigma2", "weight",
                       "p_max_db", "i_th", "seed"},
                      context, "topology");
  if (!t.contains("n")) fail(context, "topology.n is required");
  cfg.topology.n = get_int(t, "n", 0, context);
  cfg.topology.cell_radius = get_number(t, "cell_radius", cfg.topology.cell_radius, context);
  cfg.topology.pair_distance_max = get_number(t, "pair_distance_max", cfg.topology.pair_distance_max, context);
  cfg.topology.path_loss_exponent = get_number(t, "path_loss_exponent", cfg.topology.path_loss_exponent, context);
  cfg.topology.sigma2 = get_number(t, "sigma2", cfg.topology.sigma2, context);
  cfg.topology.weight = get_number(t, "weight", cfg.topology.weight, context);
  cfg.topology.p_max_db = get_number(t, "p_max_db", cfg.topology.p_max_db, context);
  cfg.topology.i_th = get_number(t, "i_th", cfg.topology.i_th, context);
  if (t.contains("seed")) {
    const json& s = t["seed"];
    if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<long long>() >= 0)) {
      fail(context, "topology.seed must be a nonnegative integer");
    }
    cfg.topology.seed = s.get<std::uint64_t>();
  }

  cfg.trials = get_int(j, "trials", cfg.trials, context);
  cfg.trials_full = get_int(j, "trials_full", cfg.trials_full, context);
  if (j.contains("sweep")) {
    if (!j["sweep"].is_object()) fail(context, "sweep must be an object");
    const json& s = j["sweep"];
    reject_unknown_keys(s, {"from", "to", "points"}, context, "sweep");
    cfg.sweep.from = get_number(s, "from", cfg.sweep.from, context);
    cfg.sweep.to = get_number(s, "to", cfg.sweep.to, context);
    cfg.sweep.points = get_int(s, "points", cfg.sweep.points, context);
  }
  cfg.price_factor = get_number(j, "price_factor", cfg.price_factor, context);
  if (!j.contains("output_path") || !j["output_path"].is_string()) fail(context, "output_path must be a string");
  cfg.output_path = j["output_path"].get<std::string>();

  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    fail(context, e.what());
  }
  return cfg;
}

std::string scenario_config_to_json(const ScenarioConfig& cfg) {
  return config_to_json_obj(cfg).dump(2) + "\n";
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

namespace {

std::vector<double> linspace(double from, double to, int points) {
  std::vector<double> out(points);
  for (int k = 0; k < points; ++k) {
    out[k] = from + (to - from) * static_cast<double>(k) / static_cast<double>(points - 1);
  }
  return out;
}

int write_convergence(const ScenarioConfig& cfg, std::ostream& os) {
  NetworkInstance net = sample_network(cfg.topology);
  double price = price_upper_bound(net) * cfg.price_factor;
  PriceVector prices(static_cast<std::size_t>(net.n), price);

  os << "init,iteration,user,power\n";
  int rows = 0;
  const std::pair<const char*, double> inits[] = {{"zero", 0.0}, {"pmax", 1.0}};
  for (const auto& [label, frac] : inits) {
    PowerVector p0(net.n);
    for (int i = 0; i < net.n; ++i) p0[i] = frac * net.p_max[i];
    std::vector<PowerVector> trace;
    solve_ne(net, prices, p0, kNeTol, kNeMaxIter, &trace);
    for (std::size_t t = 0; t < trace.size(); ++t) {
      for (int i = 0; i < net.n; ++i) {
        os << label << ',' << t << ',' << (i + 1) << ',' << format_double(trace[t][i]) << '\n';
        ++rows;
      }
    }
  }
  return rows;
}

int write_uniform_sweep(const ScenarioConfig& cfg, std::ostream& os) {
  NetworkInstance net = sample_network(cfg.topology);
  double upper = price_upper_bound(net);

  os << "price,revenue,interference";
  for (int i = 1; i <= net.n; ++i) os << ",p_" << i;
  os << '\n';
  int rows = 0;
  for (double mult : linspace(cfg.sweep.from, cfg.sweep.to, cfg.sweep.points)) {
    double price = mult * upper;
    NeResult ne = solve_ne(net, PriceVector(static_cast<std::size_t>(net.n), price));
    double interference = total_interference(net, ne.powers);
    os << format_double(price) << ',' << format_double(price * interference) << ','
       << format_double(interference);
    for (int i = 0; i < net.n; ++i) os << ',' << format_double(ne.powers[i]);
    os << '\n';
    ++rows;
  }
  return rows;
}

int write_active_users(const ScenarioConfig& cfg, std::ostream& os) {
  NetworkInstance net = sample_network(cfg.topology);
  double upper = price_upper_bound(net);

  os << "price,active_users\n";
  int rows = 0;
  for (double mult : linspace(cfg.sweep.from, cfg.sweep.to, cfg.sweep.points)) {
    double price = mult * upper;
    NeResult ne = solve_ne(net, PriceVector(static_cast<std::size_t>(net.n), price));
    int active = 0;
    for (double p : ne.powers) {
      if (p > 0.0) ++active;
    }
    os << format_double(price) << ',' << active << '\n';
    ++rows;
  }
  return rows;
}

double sum_rate(const NetworkInstance& net, const PowerVector& p) {
  double acc = 0.0;
  for (int i = 0; i < net.n; ++i) acc += rate(net, p, i);
  return acc;
}

int write_comparison(const ScenarioConfig& cfg, std::ostream& os, std::vector<ExcludedTrial>& excluded) {
  const bool sweep_snr = cfg.scenario == Scenario::compare_snr;
  const char* value_column = sweep_snr ? "p_max_db" : "i_th";
  static constexpr const char* kSchemes[] = {"uniform", "optimal", "suboptimal"};
  static constexpr const char* kMetrics[] = {"sum_rate", "revenue"};

  os << "kind," << value_column << ",scheme,metric,trial,value\n";
  int rows = 0;
  for (double v : linspace(cfg.sweep.from, cfg.sweep.to, cfg.sweep.points)) {
    double sums[3][2] = {};
    int included = 0;
    for (int k = 0; k < cfg.trials; ++k) {
      TopologyConfig topo = cfg.topology;
      topo.seed = cfg.topology.seed + static_cast<std::uint64_t>(k);
      if (sweep_snr) {
        topo.p_max_db = v;
      } else {
        topo.i_th = v;
      }
      NetworkInstance net = sample_network(topo);

      double cell[3][2] = {};
      try {
        DiffPricingResult opt = solve_optimal(net);
        if (!opt.degenerate_users.empty()) {
          excluded.push_back({k, topo.seed,
                              std::string(value_column) + "=" + format_double(v) + ": degenerate LP recovery"});
          continue;
        }
        cell[1][0] = sum_rate(net, opt.powers);
        cell[1][1] = opt.objective;
      } catch (const std::runtime_error& e) {
        excluded.push_back({k, topo.seed, std::string(value_column) + "=" + format_double(v) + ": " + e.what()});
        continue;
      }
      UniformPricingResult uni = solve_uniform(net);
      cell[0][0] = sum_rate(net, uni.outcome.powers);
      cell[0][1] = uni.outcome.revenue;
      SuboptimalResult sub = solve_suboptimal(net);
      cell[2][0] = sum_rate(net, sub.powers);
      cell[2][1] = bs_revenue(net, sub.powers, sub.prices);

      for (int s = 0; s < 3; ++s) {
        for (int m = 0; m < 2; ++m) {
          os << "trial," << format_double(v) << ',' << kSchemes[s] << ',' << kMetrics[m] << ',' << k << ','
             << format_double(cell[s][m]) << '\n';
          ++rows;
          sums[s][m] += cell[s][m];
        }
      }
      ++included;
    }
    if (included > 0) {
      for (int s = 0; s < 3; ++s) {
        for (int m = 0; m < 2; ++m) {
          os << "mean," << format_double(v) << ',' << kSchemes[s] << ',' << kMetrics[m] << ",,"
             << format_double(sums[s][m] / included) << '\n';
          ++rows;
        }
      }
    }
  }
  return rows;
}

}  // namespace

RunReport run_scenario(const ScenarioConfig& cfg, const RunOverrides& overrides) {
  ScenarioConfig eff = cfg;
  if (overrides.seed) eff.topology.seed = *overrides.seed;
  if (overrides.trials) {
    eff.trials = *overrides.trials;
  } else if (overrides.full_trials) {
    eff.trials = eff.trials_full;
  }
  eff.validate();

  namespace fs = std::filesystem;
  fs::path csv_path = fs::path(overrides.out_dir.value_or(".")) / eff.output_path;
  if (csv_path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(csv_path.parent_path(), ec);
    if (ec) throw IoError("cannot create " + csv_path.parent_path().string() + ": " + ec.message());
  }

  std::ostringstream csv;
  RunReport report;
  switch (eff.scenario) {
    case Scenario::convergence:
      report.rows = write_convergence(eff, csv);
      break;
    case Scenario::uniform_sweep:
      report.rows = write_uniform_sweep(eff, csv);
      break;
    case Scenario::active_users_vs_price:
      report.rows = write_active_users(eff, csv);
      break;
    case Scenario::compare_snr:
    case Scenario::compare_ith:
      report.rows = write_comparison(eff, csv, report.excluded);
      break;
  }

  {
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) throw IoError("cannot write " + csv_path.string());
    out << csv.str();
  }

  std::string canonical = scenario_config_to_json(eff);
  char hash_hex[17];
  std::snprintf(hash_hex, sizeof(hash_hex), "%016llx",
                static_cast<unsigned long long>(fnv1a64(canonical)));

  json excluded = json::array();
  for (const auto& e : report.excluded) {
    excluded.push_back(json{{"trial", e.trial}, {"seed", e.seed}, {"reason", e.reason}});
  }
  json meta{
      {"config_hash", std::string("fnv1a64:") + hash_hex},
      {"effective_config", config_to_json_obj(eff)},
      {"excluded_trials", excluded},
      {"library", json{{"name", kLibraryName}, {"version", kLibraryVersion}}},
      {"output", eff.output_path},
      {"rng", json{{"engine", kRngFamily}, {"distributions", kRngScheme}}},
      {"rows", report.rows},
      {"scenario", to_string(eff.scenario)},
      {"seed", eff.topology.seed},
      {"trials", eff.trials},
  };

  fs::path meta_path = csv_path;
  meta_path += ".meta.json";
  {
    std::ofstream out(meta_path, std::ios::binary);
    if (!out) throw IoError("cannot write " + meta_path.string());
    out << meta.dump(2) << '\n';
  }

  report.csv_path = csv_path.string();
  report.meta_path = meta_path.string();
  return report;
}

const std::vector<Preset>& presets() {
  static const std::vector<Preset> list = [] {
    std::vector<Preset> v;

    ScenarioConfig fig3;
    fig3.scenario = Scenario::convergence;
    fig3.topology = {.n = 4, .p_max_db = 10.0, .i_th = 0.05, .seed = 101};
    fig3.price_factor = 0.1;
    fig3.output_path = "fig3_convergence.csv";
    v.push_back({"fig3", "equilibrium power trajectories of 4 pairs from zero and full-power starts", fig3});

    ScenarioConfig fig4 = fig3;
    fig4.scenario = Scenario::uniform_sweep;
    fig4.sweep = {0.0, 1.05, 211};
    fig4.output_path = "fig4_uniform_sweep.csv";
    v.push_back({"fig4", "revenue, interference, and powers across the uniform price range", fig4});

    ScenarioConfig fig5 = fig3;
    fig5.topology.n = 100;
    fig5.topology.seed = 202;
    fig5.output_path = "fig5_convergence.csv";
    v.push_back({"fig5", "equilibrium power trajectories of 100 pairs from both starts", fig5});

    ScenarioConfig fig6 = fig5;
    fig6.scenario = Scenario::active_users_vs_price;
    fig6.sweep = {0.0, 1.05, 106};
    fig6.output_path = "fig6_active_users.csv";
    v.push_back({"fig6", "number of transmitting users versus the uniform price", fig6});

    ScenarioConfig fig7;
    fig7.scenario = Scenario::compare_snr;
    fig7.topology = {.n = 4, .p_max_db = 10.0, .i_th = 0.05, .seed = 303};
    fig7.trials = 100;
    fig7.trials_full = 1000;
    fig7.sweep = {0.0, 30.0, 7};
    fig7.output_path = "fig7_comparison.csv";
    v.push_back({"fig7", "scheme comparison (sum rate and revenue) versus peak transmit power", fig7});

    ScenarioConfig fig8 = fig7;
    fig8.scenario = Scenario::compare_ith;
    fig8.topology.p_max_db = 20.0;
    fig8.topology.seed = 404;
    fig8.sweep = {0.01, 0.31, 7};
    fig8.output_path = "fig8_comparison.csv";
    v.push_back({"fig8", "scheme comparison (sum rate and revenue) versus the interference threshold", fig8});

    return v;
  }();
  return list;
}

const Preset* find_preset(std::string_view name) {
  for (const auto& p : presets()) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

}  // namespace d2d

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "d2dprice/model.hpp"

namespace d2d {

enum class Scenario {
  convergence,
  uniform_sweep,
  active_users_vs_price,
  compare_snr,
  compare_ith,
};

const char* to_string(Scenario s);
Scenario scenario_from_string(std::string_view name);

/// Closed sweep interval sampled at `points` equally spaced values.
struct SweepSpec {
  double from = 0.0;
  double to = 1.05;
  int points = 211;
};

struct ScenarioConfig {
  Scenario scenario = Scenario::convergence;
  TopologyConfig topology;
  int trials = 1;
  int trials_full = 1000;
  SweepSpec sweep;
  double price_factor = 0.1;  // uniform price as a fraction of the upper bound (convergence scenario)
  std::string output_path;

  void validate() const;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses a scenario configuration from JSON text. Unknown keys, missing
/// required keys, and out-of-domain values raise ConfigError naming the
/// offending field; `context` is prefixed to messages (typically the file
/// path).
ScenarioConfig parse_scenario_config(const std::string& json_text, const std::string& context = "");

/// Canonical JSON serialization of a configuration (sorted keys, two-space
/// indent, trailing newline).
std::string scenario_config_to_json(const ScenarioConfig& cfg);

struct ExcludedTrial {
  int trial = 0;
  std::uint64_t seed = 0;
  std::string reason;
};

struct RunReport {
  std::string csv_path;
  std::string meta_path;
  int rows = 0;  // data rows written, excluding the header
  std::vector<ExcludedTrial> excluded;
};

struct RunOverrides {
  std::optional<std::string> out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  bool full_trials = false;  // use trials_full instead of trials
};

/// Runs one scenario and writes its CSV plus a metadata sidecar
/// (<output>.meta.json). Output is deterministic: identical configuration
/// and seed produce byte-identical files.
RunReport run_scenario(const ScenarioConfig& cfg, const RunOverrides& overrides = {});

struct Preset {
  std::string name;
  std::string summary;
  ScenarioConfig config;
};

/// Built-in scenario presets, smallest first. Trial counts are sized for a
/// quick desk run; RunOverrides::full_trials switches to the full counts.
const std::vector<Preset>& presets();

/// Returns nullptr when no preset has the given name.
const Preset* find_preset(std::string_view name);

/// FNV-1a 64-bit hash, used to fingerprint configurations in metadata.
std::uint64_t fnv1a64(std::string_view data);

}  // namespace d2d

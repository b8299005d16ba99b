// Command-line front end for the d2dprice library. Talks to the shared
// library exclusively through the public C interface.

#include <cstdint>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "d2dprice.h"

namespace {

int exit_code_for(d2d_status status) {
  switch (status) {
    case D2D_OK: return 0;
    case D2D_ERR_INVALID_ARGUMENT:
    case D2D_ERR_CONFIG: return 1;
    case D2D_ERR_IO: return 2;
    default: return 3;
  }
}

int run_command(const std::string& config, const std::string& preset, const std::string& out_dir,
                bool have_seed, std::uint64_t seed, bool have_trials, int trials, bool full) {
  const char* out = out_dir.empty() ? nullptr : out_dir.c_str();
  const uint64_t* seed_ptr = have_seed ? &seed : nullptr;
  const int* trials_ptr = have_trials ? &trials : nullptr;

  char* report = nullptr;
  d2d_status status;
  if (!preset.empty()) {
    char* config_json = nullptr;
    status = d2d_preset_config_json(preset.c_str(), &config_json);
    if (status != D2D_OK) {
      std::fprintf(stderr, "error: %s\n", d2d_last_error());
      return exit_code_for(status);
    }
    status = d2d_run_scenario_json(config_json, out, seed_ptr, trials_ptr, full ? 1 : 0, &report);
    d2d_string_free(config_json);
  } else {
    status = d2d_run_scenario_file(config.c_str(), out, seed_ptr, trials_ptr, full ? 1 : 0, &report);
  }
  if (status != D2D_OK) {
    std::fprintf(stderr, "error: %s\n", d2d_last_error());
    return exit_code_for(status);
  }
  std::printf("%s\n", report);
  d2d_string_free(report);
  return 0;
}

int list_scenarios() {
  int count = d2d_preset_count();
  for (int i = 0; i < count; ++i) {
    std::printf("%-6s %s\n", d2d_preset_name(i), d2d_preset_summary(i));
  }
  std::printf("\nrun one with: d2dprice run --preset <name> [--out DIR]\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stackelberg interference pricing simulator for D2D underlay networks"};
  app.set_version_flag("--version", std::string(d2d_version()));
  app.require_subcommand(1);

  std::string config, preset, out_dir;
  std::uint64_t seed = 0;
  int trials = 0;
  bool full = false;

  CLI::App* run = app.add_subcommand("run", "run a scenario and write its CSV output");
  CLI::Option* config_opt = run->add_option("--config", config, "scenario config JSON file");
  CLI::Option* preset_opt = run->add_option("--preset", preset, "built-in preset name (see list-scenarios)");
  config_opt->excludes(preset_opt);
  preset_opt->excludes(config_opt);
  run->add_option("--out", out_dir, "output directory (default: current directory)");
  CLI::Option* seed_opt = run->add_option("--seed", seed, "override the base seed");
  CLI::Option* trials_opt = run->add_option("--trials", trials, "override the trial count");
  run->add_flag("--full", full, "use the config's full-scale trial count");

  app.add_subcommand("list-scenarios", "list the built-in scenario presets");

  CLI11_PARSE(app, argc, argv);

  if (app.got_subcommand("list-scenarios")) return list_scenarios();
  if (config.empty() && preset.empty()) {
    std::fprintf(stderr, "error: run requires --config or --preset\n");
    return 1;
  }
  return run_command(config, preset, out_dir, seed_opt->count() > 0, seed, trials_opt->count() > 0,
                     trials, full);
}

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "isacnd/harness.hpp"

namespace {

// Every config key doubles as a CLI flag; flags override the file, the file overrides defaults.
struct ConfigCli {
  std::string config_path;
  std::vector<std::string> values;
  std::vector<CLI::Option*> opts;

  void attach(CLI::App* sub) {
    sub->add_option("--config", config_path, "flat key=value config file");
    const auto& keys = isacnd::config_keys();
    values.resize(keys.size());
    opts.resize(keys.size());
    for (size_t i = 0; i < keys.size(); ++i)
      opts[i] = sub->add_option("--" + std::string(keys[i].name), values[i], keys[i].doc);
  }

  isacnd::ScenarioConfig resolve() const {
    isacnd::ScenarioConfig c;
    if (!config_path.empty()) c = isacnd::load_config_file(config_path);
    const auto& keys = isacnd::config_keys();
    for (size_t i = 0; i < keys.size(); ++i)
      if (opts[i]->count()) isacnd::apply_key(c, keys[i].name, values[i]);
    return c;
  }
};

void print_summary(const isacnd::ExperimentResult& r) {
  std::printf(
      "algorithm=%s nodes=%d replications=%zu mean_convergence_slots=%.6g "
      "ci_halfwidth=%.6g median=%.6g completeness_rate=%.6g cap_rate=%.6g "
      "sensing_slots=%d\n",
      isacnd::to_string(r.algorithm), r.config.nodes, r.runs.size(),
      r.mean_convergence_slots, r.convergence_ci_halfwidth, r.median_convergence_slots,
      r.completeness_rate, r.cap_rate, r.sensing_duration);
  if (r.non_convergent)
    std::printf("warning: more than half the runs hit the slot cap; results are censored\n");
}

void maybe_write(const std::string& path, const std::string& content) {
  if (path.empty()) return;
  isacnd::write_text(path, content);
  std::printf("wrote %s\n", path.c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"directional neighbor discovery: slotted simulator and analytic curves"};
  app.require_subcommand(1);

  auto* run_cmd = app.add_subcommand("run", "run one experiment and report aggregates");
  ConfigCli run_cfg;
  run_cfg.attach(run_cmd);
  std::string run_curve, run_summary, run_json;
  bool run_strict = false;
  run_cmd->add_option("--curve-csv", run_curve, "write the mean discovery-ratio curve here");
  run_cmd->add_option("--summary-csv", run_summary, "write the one-line summary table here");
  run_cmd->add_option("--json", run_json, "write the full result, runs included, here");
  run_cmd->add_flag("--strict", run_strict, "exit nonzero if most runs hit the slot cap");

  auto* sweep_cmd = app.add_subcommand("sweep", "repeat an experiment along one parameter axis");
  ConfigCli sweep_cfg;
  sweep_cfg.attach(sweep_cmd);
  std::string sweep_axis, sweep_summary, sweep_json;
  std::vector<double> sweep_values;
  bool sweep_strict = false;
  sweep_cmd->add_option("--axis", sweep_axis,
                        "nodes, rc_ratio, epsilon0, alpha, or beamwidth_deg")
      ->required();
  sweep_cmd->add_option("--values", sweep_values, "comma-separated axis values")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_option("--summary-csv", sweep_summary, "write the summary table here");
  sweep_cmd->add_option("--json", sweep_json, "write all results as a JSON array here");
  sweep_cmd->add_flag("--strict", sweep_strict, "exit nonzero if any point is cap-dominated");

  auto* theory_cmd = app.add_subcommand("theory", "evaluate the analytic discovery curve");
  ConfigCli theory_cfg;
  theory_cfg.attach(theory_cmd);
  std::string theory_out;
  theory_cmd->add_option("--theory-csv", theory_out,
                         "write the curve here instead of stdout");

  auto* compare_cmd =
      app.add_subcommand("compare", "run several algorithms on the same scenario and seeds");
  ConfigCli compare_cfg;
  compare_cfg.attach(compare_cmd);
  std::vector<std::string> compare_algorithms;
  std::string compare_out, compare_summary;
  bool compare_strict = false;
  compare_cmd->add_option("--algorithms", compare_algorithms, "comma-separated algorithm names")
      ->required()
      ->delimiter(',');
  compare_cmd->add_option("--compare-csv", compare_out, "write per-slot ratio columns here");
  compare_cmd->add_option("--summary-csv", compare_summary, "write the summary table here");
  compare_cmd->add_flag("--strict", compare_strict,
                        "exit nonzero if any algorithm is cap-dominated");

  auto* validate_cmd =
      app.add_subcommand("validate", "check the analytic curve against fresh simulations");
  ConfigCli validate_cfg;
  validate_cfg.attach(validate_cmd);
  std::string validate_out;
  double mad_threshold = 0.15;
  bool validate_strict = false;
  validate_cmd->add_option("--validate-csv", validate_out,
                           "write per-slot simulated and analytic counts here");
  validate_cmd->add_option("--mad-threshold", mad_threshold,
                           "acceptable mean absolute deviation as a fraction of full discovery");
  validate_cmd->add_flag("--strict", validate_strict, "exit nonzero if the fit misses the bar");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (run_cmd->parsed()) {
      auto result = isacnd::run_experiment(run_cfg.resolve());
      print_summary(result);
      maybe_write(run_curve, isacnd::curve_csv(result));
      maybe_write(run_summary, isacnd::summary_csv({result}));
      maybe_write(run_json, isacnd::to_json(result).dump(2) + "\n");
      return run_strict && result.non_convergent ? 1 : 0;
    }
    if (sweep_cmd->parsed()) {
      auto results = isacnd::sweep(sweep_cfg.resolve(), sweep_axis, sweep_values);
      bool bad = false;
      for (const auto& r : results) {
        print_summary(r);
        bad = bad || r.non_convergent;
      }
      maybe_write(sweep_summary, isacnd::summary_csv(results));
      if (!sweep_json.empty()) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : results) arr.push_back(isacnd::to_json(r));
        isacnd::write_text(sweep_json, arr.dump(2) + "\n");
        std::printf("wrote %s\n", sweep_json.c_str());
      }
      return sweep_strict && bad ? 1 : 0;
    }
    if (theory_cmd->parsed()) {
      auto series = isacnd::theory(theory_cfg.resolve());
      std::string csv = isacnd::theory_csv(series);
      if (series.clamp_events)
        std::fprintf(stderr, "note: %ld probability clamps applied\n", series.clamp_events);
      if (theory_out.empty())
        std::fputs(csv.c_str(), stdout);
      else
        maybe_write(theory_out, csv);
      return 0;
    }
    if (compare_cmd->parsed()) {
      auto base = compare_cfg.resolve();
      std::vector<isacnd::ExperimentResult> results;
      bool bad = false;
      for (const auto& name : compare_algorithms) {
        auto c = base;
        c.algorithm = name;
        results.push_back(isacnd::run_experiment(c));
        print_summary(results.back());
        bad = bad || results.back().non_convergent;
      }
      maybe_write(compare_out, isacnd::compare_csv(results));
      maybe_write(compare_summary, isacnd::summary_csv(results));
      return compare_strict && bad ? 1 : 0;
    }
    if (validate_cmd->parsed()) {
      auto config = validate_cfg.resolve();
      auto result = isacnd::run_experiment(config);
      auto cfg_for_theory = config;
      cfg_for_theory.horizon =
          config.horizon > 0 ? config.horizon
                             : std::max<long>(1, static_cast<long>(result.mean_nd_ratio.size()));
      auto series = isacnd::theory(cfg_for_theory);
      auto report = isacnd::fit_report(isacnd::mean_discovered_curve(result), series.expected,
                                       config.nodes);
      print_summary(result);
      bool ok = report.mad_fraction <= mad_threshold;
      std::printf("fit: ramp_end=%ld window=%ld mad=%.6g mad_fraction=%.6g threshold=%.6g %s\n",
                  report.ramp_end, report.window, report.mad, report.mad_fraction, mad_threshold,
                  ok ? "PASS" : "FAIL");
      maybe_write(validate_out, isacnd::validate_csv(result, series));
      return validate_strict && !ok ? 1 : 0;
    }
  } catch (const isacnd::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}

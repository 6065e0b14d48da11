#pragma once

#include <cstdint>
#include <json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "isacnd/analytics.hpp"
#include "isacnd/runner.hpp"

namespace isacnd {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// User-facing scenario description. Every field maps to one config-file key and one CLI flag
// of the same name; enums stay strings here so configs echo back exactly as written.
struct ScenarioConfig {
  std::string algorithm = "G-nRS";
  int nodes = 50;
  double area_side = 2.0;
  double beamwidth_deg = 14.4;
  double comm_range = 2.8284271247461903;  // side-2 square diagonal
  double rc_ratio = 1.0;
  std::string resolution = "high";
  double p0 = 0.5;
  int sensing_slot_cost = 1;
  std::string orientation = "global";
  double epsilon0 = 0.5;
  double epsilon_decay = 0.995;
  double alpha = 0.5;
  double gamma = 0.3;
  int replications = 200;
  std::uint64_t seed = 1;
  long warmup = -1;     // -1: twice the beam count
  long slot_cap = 100000;
  long horizon = 0;     // 0: resolved per use (theory default 2000)
  int threads = 0;      // 0: hardware concurrency

  bool operator==(const ScenarioConfig&) const = default;
};

struct ConfigKey {
  const char* name;
  const char* doc;
  void (*apply)(ScenarioConfig&, const std::string&);
  std::string (*read)(const ScenarioConfig&);
};

const std::vector<ConfigKey>& config_keys();

// Unknown keys and malformed values are hard errors.
void apply_key(ScenarioConfig& config, const std::string& key, const std::string& value);
ScenarioConfig load_config_file(const std::string& path, ScenarioConfig base = {});
std::string dump_config(const ScenarioConfig& config);

void validate(const ScenarioConfig& config);
AlgorithmId algorithm_of(const ScenarioConfig& config);
RunScenario to_run_scenario(const ScenarioConfig& config);

struct ExperimentResult {
  ScenarioConfig config;
  AlgorithmId algorithm = AlgorithmId::cra;
  std::vector<RunRecord> runs;  // ordered by replication index

  // aggregates, always recomputable from runs
  double mean_convergence_slots = 0.0;
  double convergence_ci_halfwidth = 0.0;
  double median_convergence_slots = 0.0;
  double completeness_rate = 0.0;
  double cap_rate = 0.0;
  bool non_convergent = false;  // more than half the runs hit the cap
  int sensing_duration = 0;
  std::vector<double> mean_nd_ratio;     // per slot, averaged over nodes and replications
  std::vector<double> nd_ci_halfwidth;   // matching normal-approximation halfwidths
};

void compute_aggregates(ExperimentResult& result);

// Replication k runs with seed base+k; records land by replication index regardless of the
// thread count, so execution order never shows in the output.
ExperimentResult run_experiment(const ScenarioConfig& config);

// One result per axis value, every value reusing the same base seed (paired comparisons).
std::vector<ExperimentResult> sweep(const ScenarioConfig& base, const std::string& axis,
                                    const std::vector<double>& values);

AnalyticSeries theory(const ScenarioConfig& config);

// CSV emitters; columns are part of the tool's contract.
std::string curve_csv(const ExperimentResult& result);                  // slot,mean_nd_ratio,ci_halfwidth
std::string summary_csv(const std::vector<ExperimentResult>& results);  // algorithm,N,rc_ratio,mean_convergence_slots,completeness_rate
std::string theory_csv(const AnalyticSeries& series);                   // t,D,I,P,N_expected
std::string compare_csv(const std::vector<ExperimentResult>& results);  // slot,<one ratio column per algorithm>
std::string validate_csv(const ExperimentResult& result, const AnalyticSeries& series);

nlohmann::json to_json(const ExperimentResult& result);
ExperimentResult experiment_from_json(const nlohmann::json& j);

// Mean discovered-count curve implied by the stored runs (ratio times nodes-1).
std::vector<double> mean_discovered_curve(const ExperimentResult& result);

struct FitReport {
  long ramp_end = 0;    // first slot the simulated curve reaches 99% of full discovery
  long window = 0;      // evaluated prefix: 90% of the ramp
  double mad = 0.0;     // mean absolute deviation over the window, in nodes
  double mad_fraction = 0.0;  // mad / (nodes - 1)
};

FitReport fit_report(const std::vector<double>& sim_mean_discovered,
                     const std::vector<double>& theory_expected, int nodes);

void write_text(const std::string& path, const std::string& content);

}  // namespace isacnd

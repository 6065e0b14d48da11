#include "isacnd/harness.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <mutex>
#include <thread>

namespace isacnd {
namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    size_t used = 0;
    double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("bad value for " + key + ": '" + value + "'");
  }
}

long parse_long(const std::string& key, const std::string& value) {
  try {
    size_t used = 0;
    long v = std::stol(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("bad value for " + key + ": '" + value + "'");
  }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  try {
    size_t used = 0;
    unsigned long long v = std::stoull(value, &used);
    if (used != value.size() || value.front() == '-') throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("bad value for " + key + ": '" + value + "'");
  }
}

int parse_int(const std::string& key, const std::string& value) {
  long v = parse_long(key, value);
  if (v < INT_MIN || v > INT_MAX) throw ConfigError("value out of range for " + key);
  return static_cast<int>(v);
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Runs fn(0..count-1) on the requested number of threads; work is claimed by index so any
// per-index output is position-stable.
void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::mutex err_mutex;
  std::exception_ptr err;
  auto worker = [&] {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!err) err = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  int n = std::min(threads, count);
  pool.reserve(n);
  for (int i = 0; i < n; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

struct Welford {
  long n = 0;
  double sum = 0.0;
  double sumsq = 0.0;
  void add(double x) {
    ++n;
    sum += x;
    sumsq += x * x;
  }
  double mean() const { return n ? sum / n : 0.0; }
  double ci_halfwidth() const {
    if (n < 2) return 0.0;
    double var = (sumsq - sum * sum / n) / (n - 1);
    if (var < 0) var = 0;
    return 1.96 * std::sqrt(var / n);
  }
};

}  // namespace

const std::vector<ConfigKey>& config_keys() {
  static const std::vector<ConfigKey> keys = {
      {"algorithm", "discovery algorithm name",
       [](ScenarioConfig& c, const std::string& v) { c.algorithm = v; },
       [](const ScenarioConfig& c) { return c.algorithm; }},
      {"nodes", "number of nodes",
       [](ScenarioConfig& c, const std::string& v) { c.nodes = parse_int("nodes", v); },
       [](const ScenarioConfig& c) { return std::to_string(c.nodes); }},
      {"area_side", "side length of the square deployment area",
       [](ScenarioConfig& c, const std::string& v) { c.area_side = parse_double("area_side", v); },
       [](const ScenarioConfig& c) { return fmt(c.area_side); }},
      {"beamwidth_deg", "beamwidth in degrees; must divide 360",
       [](ScenarioConfig& c, const std::string& v) { c.beamwidth_deg = parse_double("beamwidth_deg", v); },
       [](const ScenarioConfig& c) { return fmt(c.beamwidth_deg); }},
      {"comm_range", "communication range; must cover the area diagonal",
       [](ScenarioConfig& c, const std::string& v) { c.comm_range = parse_double("comm_range", v); },
       [](const ScenarioConfig& c) { return fmt(c.comm_range); }},
      {"rc_ratio", "sensing range as a fraction of comm_range, in (0,1]",
       [](ScenarioConfig& c, const std::string& v) { c.rc_ratio = parse_double("rc_ratio", v); },
       [](const ScenarioConfig& c) { return fmt(c.rc_ratio); }},
      {"resolution", "sensing resolution: low or high",
       [](ScenarioConfig& c, const std::string& v) { c.resolution = v; },
       [](const ScenarioConfig& c) { return c.resolution; }},
      {"p0", "per-slot transmit probability, in (0,1)",
       [](ScenarioConfig& c, const std::string& v) { c.p0 = parse_double("p0", v); },
       [](const ScenarioConfig& c) { return fmt(c.p0); }},
      {"sensing_slot_cost", "slots charged per sensed beam",
       [](ScenarioConfig& c, const std::string& v) { c.sensing_slot_cost = parse_int("sensing_slot_cost", v); },
       [](const ScenarioConfig& c) { return std::to_string(c.sensing_slot_cost); }},
      {"orientation", "beam frame alignment: global or random",
       [](ScenarioConfig& c, const std::string& v) { c.orientation = v; },
       [](const ScenarioConfig& c) { return c.orientation; }},
      {"epsilon0", "initial exploration probability",
       [](ScenarioConfig& c, const std::string& v) { c.epsilon0 = parse_double("epsilon0", v); },
       [](const ScenarioConfig& c) { return fmt(c.epsilon0); }},
      {"epsilon_decay", "per-slot exploration decay factor",
       [](ScenarioConfig& c, const std::string& v) { c.epsilon_decay = parse_double("epsilon_decay", v); },
       [](const ScenarioConfig& c) { return fmt(c.epsilon_decay); }},
      {"alpha", "learning rate",
       [](ScenarioConfig& c, const std::string& v) { c.alpha = parse_double("alpha", v); },
       [](const ScenarioConfig& c) { return fmt(c.alpha); }},
      {"gamma", "discount factor",
       [](ScenarioConfig& c, const std::string& v) { c.gamma = parse_double("gamma", v); },
       [](const ScenarioConfig& c) { return fmt(c.gamma); }},
      {"replications", "independent runs per experiment",
       [](ScenarioConfig& c, const std::string& v) { c.replications = parse_int("replications", v); },
       [](const ScenarioConfig& c) { return std::to_string(c.replications); }},
      {"seed", "base seed; replication k uses seed+k",
       [](ScenarioConfig& c, const std::string& v) { c.seed = parse_u64("seed", v); },
       [](const ScenarioConfig& c) { return std::to_string(c.seed); }},
      {"warmup", "slots before convergence checks; -1 means twice the beam count",
       [](ScenarioConfig& c, const std::string& v) { c.warmup = parse_long("warmup", v); },
       [](const ScenarioConfig& c) { return std::to_string(c.warmup); }},
      {"slot_cap", "hard per-run slot limit",
       [](ScenarioConfig& c, const std::string& v) { c.slot_cap = parse_long("slot_cap", v); },
       [](const ScenarioConfig& c) { return std::to_string(c.slot_cap); }},
      {"horizon", "analytic curve length; 0 picks a default",
       [](ScenarioConfig& c, const std::string& v) { c.horizon = parse_long("horizon", v); },
       [](const ScenarioConfig& c) { return std::to_string(c.horizon); }},
      {"threads", "worker threads; 0 means hardware concurrency",
       [](ScenarioConfig& c, const std::string& v) { c.threads = parse_int("threads", v); },
       [](const ScenarioConfig& c) { return std::to_string(c.threads); }},
  };
  return keys;
}

void apply_key(ScenarioConfig& config, const std::string& key, const std::string& value) {
  for (const auto& k : config_keys()) {
    if (key == k.name) {
      k.apply(config, value);
      return;
    }
  }
  throw ConfigError("unknown config key: '" + key + "'");
}

ScenarioConfig load_config_file(const std::string& path, ScenarioConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string s = trim(line);
    if (s.empty()) continue;
    size_t eq = s.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key=value");
    std::string key = trim(s.substr(0, eq));
    std::string value = trim(s.substr(eq + 1));
    if (key.empty()) throw ConfigError(path + ":" + std::to_string(lineno) + ": empty key");
    apply_key(base, key, value);
  }
  return base;
}

std::string dump_config(const ScenarioConfig& config) {
  std::string out;
  for (const auto& k : config_keys()) {
    out += k.name;
    out += " = ";
    out += k.read(config);
    out += "\n";
  }
  return out;
}

AlgorithmId algorithm_of(const ScenarioConfig& config) {
  auto id = algorithm_from_string(config.algorithm);
  if (!id) throw ConfigError("unknown algorithm: '" + config.algorithm + "'");
  return *id;
}

void validate(const ScenarioConfig& config) {
  AlgorithmId id = algorithm_of(config);
  if (config.nodes < 2) throw ConfigError("nodes must be at least 2");
  if (config.area_side <= 0) throw ConfigError("area_side must be positive");
  double diag = config.area_side * std::sqrt(2.0);
  if (config.comm_range < diag * (1.0 - 1e-12))
    throw ConfigError("comm_range must cover the area diagonal (" + fmt(diag) + ")");
  double beams = 360.0 / config.beamwidth_deg;
  if (config.beamwidth_deg <= 0 || std::abs(beams - std::round(beams)) > 1e-9)
    throw ConfigError("beamwidth_deg must evenly divide 360");
  if (!(config.rc_ratio > 0 && config.rc_ratio <= 1))
    throw ConfigError("rc_ratio must be in (0,1]");
  if (config.resolution != "low" && config.resolution != "high")
    throw ConfigError("resolution must be 'low' or 'high'");
  if (needs_exact_counts(id) && config.resolution != "high")
    throw ConfigError("algorithm " + config.algorithm + " requires resolution=high");
  if (!(config.p0 > 0 && config.p0 < 1)) throw ConfigError("p0 must be in (0,1)");
  if (config.sensing_slot_cost < 1) throw ConfigError("sensing_slot_cost must be at least 1");
  if (config.orientation != "global" && config.orientation != "random")
    throw ConfigError("orientation must be 'global' or 'random'");
  if (!(config.epsilon0 >= 0 && config.epsilon0 <= 1))
    throw ConfigError("epsilon0 must be in [0,1]");
  if (!(config.epsilon_decay > 0 && config.epsilon_decay <= 1))
    throw ConfigError("epsilon_decay must be in (0,1]");
  if (!(config.alpha > 0 && config.alpha <= 1)) throw ConfigError("alpha must be in (0,1]");
  if (!(config.gamma >= 0 && config.gamma < 1)) throw ConfigError("gamma must be in [0,1)");
  if (config.replications < 1) throw ConfigError("replications must be at least 1");
  if (config.warmup < -1) throw ConfigError("warmup must be -1 or nonnegative");
  if (config.slot_cap < 1) throw ConfigError("slot_cap must be at least 1");
  if (config.horizon < 0) throw ConfigError("horizon must be nonnegative");
  if (config.threads < 0) throw ConfigError("threads must be nonnegative");
}

RunScenario to_run_scenario(const ScenarioConfig& config) {
  validate(config);
  RunScenario s;
  s.nodes = config.nodes;
  s.area_side = config.area_side;
  s.beam_count = static_cast<int>(std::round(360.0 / config.beamwidth_deg));
  s.comm_range = config.comm_range;
  s.rc_ratio = config.rc_ratio;
  s.resolution = config.resolution == "high" ? Resolution::high : Resolution::low;
  s.sensing_slot_cost = config.sensing_slot_cost;
  s.random_orientation = config.orientation == "random";
  s.algorithm = algorithm_of(config);
  s.p0 = config.p0;
  s.exploration = {config.epsilon0, config.epsilon_decay};
  s.alpha = config.alpha;
  s.gamma = config.gamma;
  s.reward_threshold = poisson_mode(config.nodes / static_cast<double>(s.beam_count));
  s.warmup = config.warmup >= 0 ? config.warmup : 2L * s.beam_count;
  s.slot_cap = config.slot_cap;
  return s;
}

void compute_aggregates(ExperimentResult& result) {
  const auto& runs = result.runs;
  const int n = result.config.nodes;
  result.sensing_duration = runs.empty() ? 0 : runs.front().sensing_duration;

  Welford detect;
  std::vector<double> detections;
  detections.reserve(runs.size());
  long complete = 0, capped = 0;
  long max_slot = 0;
  for (const auto& r : runs) {
    detect.add(static_cast<double>(r.detection_slot));
    detections.push_back(static_cast<double>(r.detection_slot));
    if (r.complete) ++complete;
    if (r.capped) ++capped;
    max_slot = std::max(max_slot, r.detection_slot);
  }
  result.mean_convergence_slots = detect.mean();
  result.convergence_ci_halfwidth = detect.ci_halfwidth();
  if (!detections.empty()) {
    std::sort(detections.begin(), detections.end());
    size_t m = detections.size();
    result.median_convergence_slots =
        m % 2 ? detections[m / 2] : 0.5 * (detections[m / 2 - 1] + detections[m / 2]);
  } else {
    result.median_convergence_slots = 0.0;
  }
  result.completeness_rate = runs.empty() ? 0.0 : static_cast<double>(complete) / runs.size();
  result.cap_rate = runs.empty() ? 0.0 : static_cast<double>(capped) / runs.size();
  result.non_convergent = !runs.empty() && 2 * capped > static_cast<long>(runs.size());

  // Ratio of links discovered so far to all n(n-1) directed links; each run's curve holds
  // flat after its detection slot so late finishers keep dragging the mean honestly.
  result.mean_nd_ratio.assign(max_slot, 0.0);
  result.nd_ci_halfwidth.assign(max_slot, 0.0);
  if (runs.empty() || max_slot == 0) return;
  const double total_links = static_cast<double>(n) * (n - 1);
  std::vector<Welford> per_slot(max_slot);
  std::vector<double> cum(max_slot);
  for (const auto& r : runs) {
    std::fill(cum.begin(), cum.end(), 0.0);
    double acc = 0.0;
    size_t e = 0;
    for (long t = 1; t <= max_slot; ++t) {
      while (e < r.events.size() && r.events[e].slot == t) {
        acc += r.events[e].direct + r.events[e].gossip;
        ++e;
      }
      cum[t - 1] = acc;
    }
    for (long t = 0; t < max_slot; ++t) per_slot[t].add(cum[t] / total_links);
  }
  for (long t = 0; t < max_slot; ++t) {
    result.mean_nd_ratio[t] = per_slot[t].mean();
    result.nd_ci_halfwidth[t] = per_slot[t].ci_halfwidth();
  }
}

ExperimentResult run_experiment(const ScenarioConfig& config) {
  RunScenario scenario = to_run_scenario(config);
  ExperimentResult result;
  result.config = config;
  result.algorithm = scenario.algorithm;
  result.runs.resize(config.replications);
  int threads = config.threads > 0 ? config.threads
                                   : static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  parallel_for(config.replications, threads, [&](int k) {
    result.runs[k] = run_single(scenario, config.seed + static_cast<std::uint64_t>(k));
  });
  compute_aggregates(result);
  return result;
}

std::vector<ExperimentResult> sweep(const ScenarioConfig& base, const std::string& axis,
                                    const std::vector<double>& values) {
  bool known = false;
  for (const char* name : {"nodes", "rc_ratio", "epsilon0", "alpha", "beamwidth_deg"})
    if (axis == name) known = true;
  if (!known) throw ConfigError("unknown sweep axis: '" + axis + "'");
  if (values.empty()) throw ConfigError("sweep needs at least one value");
  std::vector<ExperimentResult> out;
  out.reserve(values.size());
  for (double v : values) {
    ScenarioConfig c = base;
    if (axis == "nodes") {
      if (v != std::floor(v)) throw ConfigError("nodes sweep values must be integers");
      c.nodes = static_cast<int>(v);
    } else if (axis == "rc_ratio") {
      c.rc_ratio = v;
    } else if (axis == "epsilon0") {
      c.epsilon0 = v;
    } else if (axis == "alpha") {
      c.alpha = v;
    } else {
      c.beamwidth_deg = v;
    }
    out.push_back(run_experiment(c));
  }
  return out;
}

AnalyticSeries theory(const ScenarioConfig& config) {
  validate(config);
  AnalyticParams params;
  params.nodes = config.nodes;
  params.beam_count = static_cast<int>(std::round(360.0 / config.beamwidth_deg));
  params.p0 = config.p0;
  params.horizon = config.horizon > 0 ? config.horizon : 2000;
  return analytic_curve(algorithm_of(config), params);
}

std::string curve_csv(const ExperimentResult& result) {
  std::string out = "slot,mean_nd_ratio,ci_halfwidth\n";
  for (size_t t = 0; t < result.mean_nd_ratio.size(); ++t) {
    out += std::to_string(t + 1);
    out += ',';
    out += fmt(result.mean_nd_ratio[t]);
    out += ',';
    out += fmt(result.nd_ci_halfwidth[t]);
    out += '\n';
  }
  return out;
}

std::string summary_csv(const std::vector<ExperimentResult>& results) {
  std::string out = "algorithm,N,rc_ratio,mean_convergence_slots,completeness_rate\n";
  for (const auto& r : results) {
    out += to_string(r.algorithm);
    out += ',';
    out += std::to_string(r.config.nodes);
    out += ',';
    out += fmt(r.config.rc_ratio);
    out += ',';
    out += fmt(r.mean_convergence_slots);
    out += ',';
    out += fmt(r.completeness_rate);
    out += '\n';
  }
  return out;
}

std::string theory_csv(const AnalyticSeries& series) {
  std::string out = "t,D,I,P,N_expected\n";
  for (size_t i = 0; i < series.pair.size(); ++i) {
    out += std::to_string(i + 1);
    out += ',';
    out += fmt(series.direct[i]);
    out += ',';
    out += fmt(series.indirect[i]);
    out += ',';
    out += fmt(series.pair[i]);
    out += ',';
    out += fmt(series.expected[i]);
    out += '\n';
  }
  return out;
}

std::string compare_csv(const std::vector<ExperimentResult>& results) {
  std::string out = "slot";
  size_t len = 0;
  for (const auto& r : results) {
    out += ',';
    out += to_string(r.algorithm);
    len = std::max(len, r.mean_nd_ratio.size());
  }
  out += '\n';
  for (size_t t = 0; t < len; ++t) {
    out += std::to_string(t + 1);
    for (const auto& r : results) {
      out += ',';
      const auto& curve = r.mean_nd_ratio;
      double v = curve.empty() ? 0.0 : (t < curve.size() ? curve[t] : curve.back());
      out += fmt(v);
    }
    out += '\n';
  }
  return out;
}

std::vector<double> mean_discovered_curve(const ExperimentResult& result) {
  std::vector<double> out(result.mean_nd_ratio.size());
  double scale = static_cast<double>(result.config.nodes - 1);
  for (size_t i = 0; i < out.size(); ++i) out[i] = result.mean_nd_ratio[i] * scale;
  return out;
}

std::string validate_csv(const ExperimentResult& result, const AnalyticSeries& series) {
  std::string out = "slot,sim_mean_discovered,theory_expected\n";
  std::vector<double> sim = mean_discovered_curve(result);
  size_t len = std::min(sim.size(), series.expected.size());
  for (size_t t = 0; t < len; ++t) {
    out += std::to_string(t + 1);
    out += ',';
    out += fmt(sim[t]);
    out += ',';
    out += fmt(series.expected[t]);
    out += '\n';
  }
  return out;
}

nlohmann::json to_json(const ExperimentResult& result) {
  nlohmann::json cfg;
  for (const auto& k : config_keys()) cfg[k.name] = k.read(result.config);
  nlohmann::json runs = nlohmann::json::array();
  for (const auto& r : result.runs) {
    nlohmann::json events = nlohmann::json::array();
    for (const auto& e : r.events) events.push_back({e.slot, e.direct, e.gossip});
    runs.push_back({{"seed", r.seed},
                    {"nodes", r.nodes},
                    {"sensing_duration", r.sensing_duration},
                    {"detection_slot", r.detection_slot},
                    {"last_discovery_slot", r.last_discovery_slot},
                    {"capped", r.capped},
                    {"complete", r.complete},
                    {"total_discovered", r.total_discovered},
                    {"hello_collisions", r.hello_collision_count},
                    {"feedback_collisions", r.feedback_collision_count},
                    {"suppressed", r.suppressed_count},
                    {"completion_slot", r.completion_slot},
                    {"events", events}});
  }
  return {{"config", cfg},
          {"algorithm", to_string(result.algorithm)},
          {"runs", runs},
          {"aggregates",
           {{"mean_convergence_slots", result.mean_convergence_slots},
            {"convergence_ci_halfwidth", result.convergence_ci_halfwidth},
            {"median_convergence_slots", result.median_convergence_slots},
            {"completeness_rate", result.completeness_rate},
            {"cap_rate", result.cap_rate},
            {"non_convergent", result.non_convergent},
            {"sensing_duration", result.sensing_duration},
            {"mean_nd_ratio", result.mean_nd_ratio},
            {"nd_ci_halfwidth", result.nd_ci_halfwidth}}}};
}

ExperimentResult experiment_from_json(const nlohmann::json& j) {
  ExperimentResult result;
  const auto& cfg = j.at("config");
  for (const auto& k : config_keys())
    apply_key(result.config, k.name, cfg.at(k.name).get<std::string>());
  result.algorithm = algorithm_of(result.config);
  for (const auto& rj : j.at("runs")) {
    RunRecord r;
    r.seed = rj.at("seed").get<std::uint64_t>();
    r.nodes = rj.at("nodes").get<int>();
    r.sensing_duration = rj.at("sensing_duration").get<int>();
    r.detection_slot = rj.at("detection_slot").get<long>();
    r.last_discovery_slot = rj.at("last_discovery_slot").get<long>();
    r.capped = rj.at("capped").get<bool>();
    r.complete = rj.at("complete").get<bool>();
    r.total_discovered = rj.at("total_discovered").get<long>();
    r.hello_collision_count = rj.at("hello_collisions").get<long>();
    r.feedback_collision_count = rj.at("feedback_collisions").get<long>();
    r.suppressed_count = rj.at("suppressed").get<long>();
    r.completion_slot = rj.at("completion_slot").get<std::vector<long>>();
    for (const auto& ej : rj.at("events")) {
      RunRecord::SlotEvents e;
      e.slot = ej.at(0).get<long>();
      e.direct = ej.at(1).get<int>();
      e.gossip = ej.at(2).get<int>();
      r.events.push_back(e);
    }
    result.runs.push_back(std::move(r));
  }
  compute_aggregates(result);
  return result;
}

FitReport fit_report(const std::vector<double>& sim_mean_discovered,
                     const std::vector<double>& theory_expected, int nodes) {
  FitReport report;
  if (sim_mean_discovered.empty()) return report;
  const double full = static_cast<double>(nodes - 1);
  long ramp_end = static_cast<long>(sim_mean_discovered.size());
  for (size_t t = 0; t < sim_mean_discovered.size(); ++t) {
    if (sim_mean_discovered[t] >= 0.99 * full) {
      ramp_end = static_cast<long>(t + 1);
      break;
    }
  }
  report.ramp_end = ramp_end;
  report.window = std::max(1L, static_cast<long>(std::floor(0.9 * ramp_end)));
  report.window = std::min<long>(report.window,
                                 static_cast<long>(std::min(sim_mean_discovered.size(),
                                                            theory_expected.size())));
  double acc = 0.0;
  for (long t = 0; t < report.window; ++t)
    acc += std::abs(sim_mean_discovered[t] - theory_expected[t]);
  report.mad = report.window ? acc / report.window : 0.0;
  report.mad_fraction = full > 0 ? report.mad / full : 0.0;
  return report;
}

void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace isacnd

#include "isacnd/runner.hpp"

#include "isacnd/rng.hpp"

namespace isacnd {

namespace {
enum Stream : std::uint64_t { placement = 1, orientation = 2, decisions = 3 };
}

RunRecord run_single(const RunScenario& scenario, std::uint64_t seed,
                     const SlotObserver* observer) {
  const int n = scenario.nodes;
  const auto tr = traits(scenario.algorithm);
  const bool learning = tr.beam_policy == BeamPolicy::q_learning;

  NodeLayout layout =
      place_nodes(n, scenario.area_side, scenario.comm_range, derive_seed(seed, Stream::placement));
  BeamSpec spec = make_beam_spec(scenario.beam_count);
  if (scenario.random_orientation)
    spec.orientations = random_orientations(n, derive_seed(seed, Stream::orientation));

  SensingConfig sensing_cfg;
  sensing_cfg.comm_range = scenario.comm_range;
  sensing_cfg.rc_ratio = scenario.rc_ratio;
  sensing_cfg.resolution = scenario.resolution;
  sensing_cfg.slot_cost = scenario.sensing_slot_cost;
  const SensingReport sensing = run_sensing_phase(layout, spec, sensing_cfg);

  const RunContext ctx = make_run_context(layout, spec, scenario.comm_range,
                                          scenario.comm_range * scenario.rc_ratio);
  std::vector<NodeState> states = make_node_states(sensing, scenario.beam_count, learning);

  std::vector<std::mt19937_64> node_rng;
  node_rng.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    node_rng.push_back(make_engine(seed, Stream::decisions, static_cast<std::uint64_t>(i)));
  if (learning)
    for (int i = 0; i < n; ++i)
      states[static_cast<std::size_t>(i)].next_state =
          choose_transceiver_state(scenario.p0, node_rng[static_cast<std::size_t>(i)]);

  PolicyContext policy;
  policy.algorithm = scenario.algorithm;
  policy.p0 = scenario.p0;
  policy.beams = scenario.beam_count;
  policy.reward_threshold = scenario.reward_threshold;
  policy.exploration = scenario.exploration;

  EngineOptions options{tr.gossip, tr.non_reply};

  RunRecord record;
  record.seed = seed;
  record.nodes = n;
  record.sensing_duration = sensing.duration;
  record.completion_slot.assign(static_cast<std::size_t>(n), -1);

  const long full_list = n - 1;
  if (full_list == 0)
    for (auto& c : record.completion_slot) c = 0;

  std::vector<SlotDecision> decisions(static_cast<std::size_t>(n));
  long last_discovery = 0;
  long t = 0;
  while (true) {
    ++t;
    for (int i = 0; i < n; ++i)
      decisions[static_cast<std::size_t>(i)] = make_decision(
          policy, states[static_cast<std::size_t>(i)], t, node_rng[static_cast<std::size_t>(i)]);

    SlotOutcome outcome = run_slot(ctx, states, decisions, options);
    outcome.slot = t;

    record.hello_collision_count += static_cast<long>(outcome.hello_collisions.size());
    record.feedback_collision_count += static_cast<long>(outcome.feedback_collisions.size());
    record.suppressed_count += static_cast<long>(outcome.feedback_suppressed.size());

    const int direct = static_cast<int>(outcome.direct_discoveries.size());
    const int gossip = static_cast<int>(outcome.gossip_discoveries.size());
    if (direct + gossip > 0) {
      last_discovery = t;
      record.events.push_back({t, direct, gossip});
      record.total_discovered += direct + gossip;
      for (int i = 0; i < n; ++i) {
        auto& s = states[static_cast<std::size_t>(i)];
        if (s.known_count == full_list && record.completion_slot[static_cast<std::size_t>(i)] < 0)
          record.completion_slot[static_cast<std::size_t>(i)] = t;
      }
    }

    if (learning) {
      for (int i = 0; i < n; ++i) {
        auto& s = states[static_cast<std::size_t>(i)];
        const auto& d = decisions[static_cast<std::size_t>(i)];
        const Transceiver acted = s.next_state;
        const int r = reward(s.radar.count(d.beam),
                             s.settled_per_beam[static_cast<std::size_t>(d.beam)],
                             policy.reward_threshold);
        s.next_state = choose_transceiver_state(scenario.p0, node_rng[static_cast<std::size_t>(i)]);
        q_update(s.q, acted, d.beam, r, s.next_state, scenario.alpha, scenario.gamma);
      }
    }

    if (observer) (*observer)(t, layout, spec, decisions, outcome);

    const RunStatus status = check_convergence(last_discovery, t, scenario.warmup,
                                               scenario.slot_cap);
    if (status == RunStatus::running) continue;
    record.capped = status == RunStatus::capped;
    record.detection_slot = t;
    record.last_discovery_slot = last_discovery;
    break;
  }

  record.complete =
      record.total_discovered == static_cast<long>(n) * full_list;
  return record;
}

}  // namespace isacnd

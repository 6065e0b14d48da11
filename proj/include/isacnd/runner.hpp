#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "isacnd/algorithms.hpp"
#include "isacnd/engine.hpp"
#include "isacnd/geometry.hpp"
#include "isacnd/policies.hpp"
#include "isacnd/sensing.hpp"

namespace isacnd {

// Fully resolved parameters for one replication.
struct RunScenario {
  int nodes = 2;
  double area_side = 2.0;
  int beam_count = 1;
  double comm_range = 0.0;
  double rc_ratio = 1.0;
  Resolution resolution = Resolution::high;
  int sensing_slot_cost = 1;
  bool random_orientation = false;
  AlgorithmId algorithm = AlgorithmId::cra;
  double p0 = 0.5;
  ExplorationSchedule exploration;
  double alpha = 0.5;
  double gamma = 0.3;
  int reward_threshold = 0;
  long warmup = 0;
  long slot_cap = 100000;
};

using SlotObserver =
    std::function<void(long slot, const NodeLayout& layout, const BeamSpec& spec,
                       const std::vector<SlotDecision>& decisions, const SlotOutcome& outcome)>;

// One seeded replication: placement, radar sweep, then handshake slots until the convergence
// detector fires or the cap is hit. Handshake slots are counted from 1; the sensing phase is
// reported separately and never counts toward convergence time.
RunRecord run_single(const RunScenario& scenario, std::uint64_t seed,
                     const SlotObserver* observer = nullptr);

}  // namespace isacnd

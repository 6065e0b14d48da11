#pragma once

#include <random>
#include <vector>

#include "isacnd/algorithms.hpp"
#include "isacnd/engine.hpp"
#include "isacnd/qlearning.hpp"

namespace isacnd {

// Per-run constants every node's decision draws on.
struct PolicyContext {
  AlgorithmId algorithm = AlgorithmId::cra;
  double p0 = 0.5;  // transmit probability, strictly inside (0, 1)
  int beams = 1;
  int reward_threshold = 0;
  ExplorationSchedule exploration;
};

Transceiver choose_transceiver_state(double p0, std::mt19937_64& rng);

// Beam set a non-learning policy may select from; learning policies range over every beam.
std::vector<int> eligible_beams(const NodeState& state, BeamPolicy policy);

// Uniform choice from the eligible set; -1 when the set is empty (the node idles).
int choose_beam(const std::vector<int>& eligible, std::mt19937_64& rng);

// State draw plus beam selection for one node and slot. Learning variants consume the
// pre-drawn next_state on the node instead of drawing fresh.
SlotDecision make_decision(const PolicyContext& ctx, NodeState& state, long slot,
                           std::mt19937_64& rng);

}  // namespace isacnd

#include "isacnd/policies.hpp"

#include <stdexcept>

#include "isacnd/rng.hpp"

namespace isacnd {

namespace {

bool beam_eligible(const NodeState& state, BeamPolicy policy, int beam) {
  switch (policy) {
    case BeamPolicy::all_beams: return true;
    case BeamPolicy::non_empty: return state.radar.non_empty(beam);
    case BeamPolicy::stop_filtered:
      return state.radar.count(beam) > state.settled_per_beam[static_cast<std::size_t>(beam)];
    case BeamPolicy::q_learning: return true;
  }
  return false;
}

}  // namespace

Transceiver choose_transceiver_state(double p0, std::mt19937_64& rng) {
  return uniform01(rng) < p0 ? Transceiver::transmit : Transceiver::receive;
}

std::vector<int> eligible_beams(const NodeState& state, BeamPolicy policy) {
  std::vector<int> out;
  const int beams = state.radar.beams();
  for (int m = 0; m < beams; ++m)
    if (beam_eligible(state, policy, m)) out.push_back(m);
  return out;
}

int choose_beam(const std::vector<int>& eligible, std::mt19937_64& rng) {
  if (eligible.empty()) return -1;
  return eligible[static_cast<std::size_t>(uniform_int(rng, static_cast<int>(eligible.size())))];
}

SlotDecision make_decision(const PolicyContext& ctx, NodeState& state, long slot,
                           std::mt19937_64& rng) {
  const auto tr = traits(ctx.algorithm);
  SlotDecision decision;

  if (tr.beam_policy == BeamPolicy::q_learning) {
    const Transceiver s = state.next_state;
    decision.mode = s == Transceiver::transmit ? SlotDecision::Mode::transmit
                                               : SlotDecision::Mode::receive;
    decision.beam = select_action(state.q, s, ctx.exploration.at(slot), rng);
    return decision;
  }

  const Transceiver s = choose_transceiver_state(ctx.p0, rng);

  // uniform pick without materializing the eligible set
  int eligible = 0;
  for (int m = 0; m < ctx.beams; ++m)
    if (beam_eligible(state, tr.beam_policy, m)) ++eligible;
  if (eligible == 0) return decision;  // idle

  int pick = uniform_int(rng, eligible);
  for (int m = 0; m < ctx.beams; ++m) {
    if (!beam_eligible(state, tr.beam_policy, m)) continue;
    if (pick == 0) {
      decision.beam = m;
      break;
    }
    --pick;
  }
  decision.mode = s == Transceiver::transmit ? SlotDecision::Mode::transmit
                                             : SlotDecision::Mode::receive;
  return decision;
}

}  // namespace isacnd

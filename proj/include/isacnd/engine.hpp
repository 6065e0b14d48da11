#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "isacnd/geometry.hpp"
#include "isacnd/qlearning.hpp"
#include "isacnd/sensing.hpp"

namespace isacnd {

struct EngineOptions {
  bool gossip = false;     // feedback carries the sender's full neighbor list
  bool non_reply = false;  // no feedback to a sender once the pair's handshake completed
};

struct SlotDecision {
  enum class Mode { transmit, receive, idle };
  Mode mode = Mode::idle;
  int beam = -1;
};

struct NodeState {
  int id = -1;
  RadarList radar;
  std::vector<std::uint8_t> known;  // known[j] != 0 once neighbor j is discovered
  int known_count = 0;
  // exchanged[j] != 0 once a handshake between the two completed, i.e. some feedback between
  // them was decoded; set at both endpoints at once. The non-reply rule keys on this, not on
  // known, so a pair that merely heard of each other through relayed lists still gets its
  // reply, and a reply lost to a collision does not silence the pair.
  std::vector<std::uint8_t> exchanged;
  // Per-beam tally of sensed neighbors whose knowledge is mutual, whichever way each
  // direction was learned. The stop filter compares this against the radar counts so a
  // beam stays open until everyone sensed in it knows the owner back, and the learning
  // reward compares it against the radar count and the occupancy threshold, so relayed
  // lists can release a beam the same as handshakes do.
  std::vector<int> settled_per_beam;
  QTable q;                                       // untouched unless the policy learns
  Transceiver next_state = Transceiver::receive;  // learning variants pre-draw it

  bool has(int j) const { return known[static_cast<std::size_t>(j)] != 0; }
};

// Pairwise geometry cached once per replication: positions never move mid-run.
struct RunContext {
  int n = 0;
  int beams = 0;
  std::vector<std::int16_t> beam_of;    // observer * n + target
  std::vector<std::uint8_t> reachable;  // within communication range
  std::vector<std::uint8_t> sensed;     // within sensing range

  std::int16_t beam(int i, int j) const { return beam_of[static_cast<std::size_t>(i) * n + j]; }
  bool in_range(int i, int j) const {
    return reachable[static_cast<std::size_t>(i) * n + j] != 0;
  }
  bool in_sensing(int i, int j) const {
    return sensed[static_cast<std::size_t>(i) * n + j] != 0;
  }
};

RunContext make_run_context(const NodeLayout& layout, const BeamSpec& spec, double comm_range,
                            double sensing_range);

std::vector<NodeState> make_node_states(const SensingReport& sensing, int beam_count,
                                        bool learning);

struct SlotOutcome {
  long slot = 0;
  std::vector<std::pair<int, int>> hello_decoded;     // (receiver, transmitter)
  std::vector<int> hello_collisions;                  // receivers hit by >= 2 hellos
  std::vector<std::pair<int, int>> feedback_decoded;  // (transmitter, replier)
  std::vector<int> feedback_collisions;               // transmitters hit by >= 2 feedbacks
  std::vector<std::pair<int, int>> feedback_suppressed;  // (receiver, transmitter) kept silent
  std::vector<std::pair<int, int>> feedback_overheard;   // (silent receiver, replier)
  std::vector<std::pair<int, int>> direct_discoveries;   // ordered (discoverer, discovered)
  std::vector<std::pair<int, int>> gossip_discoveries;   // ordered (discoverer, discovered)
  std::vector<std::pair<int, int>> settled;               // pairs completed this slot, low id first
};

// One two-way handshake slot: hello sub-slot, feedback sub-slot, then all neighbor-list and
// per-beam updates applied together. A packet is delivered only when sender and listener
// cover each other, and any listener reached by two or more packets decodes nothing.
SlotOutcome run_slot(const RunContext& ctx, std::vector<NodeState>& states,
                     const std::vector<SlotDecision>& decisions, const EngineOptions& options);

// New ids contributed by a feedback payload: entries of payload not yet in own, skipping self.
std::vector<int> merge_neighbor_lists(const std::vector<std::uint8_t>& own,
                                      const std::vector<std::uint8_t>& payload, int self);

// Definitional recomputation of settled_per_beam from scratch: sensed neighbors the owner
// knows and that know the owner back, binned by the owner's beam toward each.
std::vector<int> count_settled_per_beam(const NodeLayout& layout, const BeamSpec& spec,
                                        double sensing_range,
                                        const std::vector<NodeState>& states, int owner);

enum class RunStatus { running, converged, capped };

// Converged once the quiet tail since the last discovery covers half the elapsed slots
// (and the warmup has passed); capped once the slot budget is exhausted.
RunStatus check_convergence(long last_discovery_slot, long slot, long warmup, long cap);

struct RunRecord {
  std::uint64_t seed = 0;
  int nodes = 0;
  int sensing_duration = 0;
  long detection_slot = 0;
  long last_discovery_slot = 0;
  bool capped = false;
  bool complete = false;     // every ordered pair discovered
  long total_discovered = 0;
  long hello_collision_count = 0;
  long feedback_collision_count = 0;
  long suppressed_count = 0;
  std::vector<long> completion_slot;  // per node, -1 while the list never filled

  struct SlotEvents {
    long slot = 0;
    int direct = 0;
    int gossip = 0;
    bool operator==(const SlotEvents&) const = default;
  };
  std::vector<SlotEvents> events;  // only slots with at least one discovery

  bool operator==(const RunRecord&) const = default;
};

// Total ordered pairs discovered by the end of each slot 1..horizon, extended flat past the
// last event.
std::vector<long> cumulative_discovered(const RunRecord& record, long horizon);

}  // namespace isacnd

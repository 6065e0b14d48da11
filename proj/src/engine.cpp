#include "isacnd/engine.hpp"

#include <algorithm>

namespace isacnd {

RunContext make_run_context(const NodeLayout& layout, const BeamSpec& spec, double comm_range,
                            double sensing_range) {
  const int n = layout.size();
  RunContext ctx;
  ctx.n = n;
  ctx.beams = spec.beam_count;
  ctx.beam_of.assign(static_cast<std::size_t>(n) * n, 0);
  ctx.reachable.assign(static_cast<std::size_t>(n) * n, 0);
  ctx.sensed.assign(static_cast<std::size_t>(n) * n, 0);
  const double range_sq = comm_range * comm_range;
  const double sense_sq = sensing_range * sensing_range;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      ctx.beam_of[static_cast<std::size_t>(i) * n + j] =
          static_cast<std::int16_t>(beam_index(layout, spec, i, j));
      const double dx = layout.pos[j].x - layout.pos[i].x;
      const double dy = layout.pos[j].y - layout.pos[i].y;
      const double d2 = dx * dx + dy * dy;
      ctx.reachable[static_cast<std::size_t>(i) * n + j] = d2 <= range_sq ? 1 : 0;
      ctx.sensed[static_cast<std::size_t>(i) * n + j] = d2 <= sense_sq ? 1 : 0;
    }
  }
  return ctx;
}

std::vector<NodeState> make_node_states(const SensingReport& sensing, int beam_count,
                                        bool learning) {
  const int n = static_cast<int>(sensing.lists.size());
  std::vector<NodeState> states(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto& s = states[static_cast<std::size_t>(i)];
    s.id = i;
    s.radar = sensing.lists[static_cast<std::size_t>(i)];
    s.known.assign(static_cast<std::size_t>(n), 0);
    s.exchanged.assign(static_cast<std::size_t>(n), 0);
    s.settled_per_beam.assign(static_cast<std::size_t>(beam_count), 0);
    if (learning) s.q = QTable(beam_count);
  }
  return states;
}

SlotOutcome run_slot(const RunContext& ctx, std::vector<NodeState>& states,
                     const std::vector<SlotDecision>& decisions, const EngineOptions& options) {
  SlotOutcome out;
  const int n = ctx.n;

  std::vector<int> transmitters;
  std::vector<int> receivers;
  transmitters.reserve(static_cast<std::size_t>(n));
  receivers.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    switch (decisions[static_cast<std::size_t>(i)].mode) {
      case SlotDecision::Mode::transmit: transmitters.push_back(i); break;
      case SlotDecision::Mode::receive: receivers.push_back(i); break;
      case SlotDecision::Mode::idle: break;
    }
  }

  // hello sub-slot: a listening node decodes the one transmitter aimed at it, if unique.
  for (int j : receivers) {
    const int beam_j = decisions[static_cast<std::size_t>(j)].beam;
    int arrivals = 0;
    int sender = -1;
    for (int i : transmitters) {
      if (!ctx.in_range(i, j)) continue;
      if (ctx.beam(i, j) != decisions[static_cast<std::size_t>(i)].beam) continue;
      if (ctx.beam(j, i) != beam_j) continue;
      if (++arrivals > 1) break;
      sender = i;
    }
    if (arrivals == 1)
      out.hello_decoded.emplace_back(j, sender);
    else if (arrivals > 1)
      out.hello_collisions.push_back(j);
  }

  // feedback sub-slot: decoding receivers answer in the sector they decoded from, except that
  // The non-reply rule stays silent toward a sender the handshake already covered;
  // transmitters listen in their own sector.
  std::vector<std::pair<int, int>> repliers;
  repliers.reserve(out.hello_decoded.size());
  for (const auto& [j, i] : out.hello_decoded) {
    if (options.non_reply &&
        states[static_cast<std::size_t>(j)].exchanged[static_cast<std::size_t>(i)]) {
      out.feedback_suppressed.emplace_back(j, i);
      continue;
    }
    repliers.emplace_back(j, i);
  }
  for (int i : transmitters) {
    const int beam_i = decisions[static_cast<std::size_t>(i)].beam;
    int arrivals = 0;
    int sender = -1;
    int target = -1;
    for (const auto& [j, tgt] : repliers) {
      if (!ctx.in_range(j, i)) continue;
      if (ctx.beam(j, i) != decisions[static_cast<std::size_t>(j)].beam) continue;
      if (ctx.beam(i, j) != beam_i) continue;
      if (++arrivals > 1) break;
      sender = j;
      target = tgt;
    }
    if (arrivals == 1 && target == i) {
      out.feedback_decoded.emplace_back(i, sender);
      states[static_cast<std::size_t>(i)].exchanged[static_cast<std::size_t>(sender)] = 1;
      states[static_cast<std::size_t>(sender)].exchanged[static_cast<std::size_t>(i)] = 1;
    } else if (arrivals > 1) {
      out.feedback_collisions.push_back(i);
    }
  }

  // A receiver that stayed silent keeps listening, so a lone feedback crossing its sector is
  // readable too. Only list-carrying variants act on it; without gossip a node ignores
  // packets addressed elsewhere. No handshake completes either way: the replier never
  // learns it was heard.
  if (options.gossip) {
    std::vector<uint8_t> replying(static_cast<std::size_t>(n), 0);
    for (const auto& [j, tgt] : repliers) replying[static_cast<std::size_t>(j)] = 1;
    for (int j : receivers) {
      if (replying[static_cast<std::size_t>(j)]) continue;
      const int beam_j = decisions[static_cast<std::size_t>(j)].beam;
      int arrivals = 0;
      int sender = -1;
      for (const auto& [k, tgt] : repliers) {
        if (!ctx.in_range(k, j)) continue;
        if (ctx.beam(k, j) != decisions[static_cast<std::size_t>(k)].beam) continue;
        if (ctx.beam(j, k) != beam_j) continue;
        if (++arrivals > 1) break;
        sender = k;
      }
      if (arrivals == 1) out.feedback_overheard.emplace_back(j, sender);
    }
  }

  // All discoveries are staged against the pre-slot lists, then applied together, so a
  // feedback payload is exactly the sender's list as the slot began.
  for (const auto& [j, i] : out.hello_decoded)
    if (!states[static_cast<std::size_t>(j)].has(i)) out.direct_discoveries.emplace_back(j, i);
  for (const auto& [i, j] : out.feedback_decoded) {
    if (!states[static_cast<std::size_t>(i)].has(j)) out.direct_discoveries.emplace_back(i, j);
    if (options.gossip)
      for (int k : merge_neighbor_lists(states[static_cast<std::size_t>(i)].known,
                                        states[static_cast<std::size_t>(j)].known, i))
        out.gossip_discoveries.emplace_back(i, k);
  }
  for (const auto& [i, j] : out.feedback_overheard) {
    if (!states[static_cast<std::size_t>(i)].has(j)) out.direct_discoveries.emplace_back(i, j);
    if (options.gossip)
      for (int k : merge_neighbor_lists(states[static_cast<std::size_t>(i)].known,
                                        states[static_cast<std::size_t>(j)].known, i))
        out.gossip_discoveries.emplace_back(i, k);
  }

  auto apply = [&](int owner, int found) {
    auto& s = states[static_cast<std::size_t>(owner)];
    s.known[static_cast<std::size_t>(found)] = 1;
    ++s.known_count;
  };
  for (const auto& [owner, found] : out.direct_discoveries) apply(owner, found);
  for (const auto& [owner, found] : out.gossip_discoveries) apply(owner, found);

  // A pair settles the moment both directions are known; every staged entry was unknown at
  // the start of the slot, so checking the reverse direction now catches exactly the pairs
  // completed this slot. Both endpoints bump their beam tallies for sensed partners.
  auto stage_settled = [&](int owner, int found) {
    if (states[static_cast<std::size_t>(found)].has(owner))
      out.settled.emplace_back(std::min(owner, found), std::max(owner, found));
  };
  for (const auto& [owner, found] : out.direct_discoveries) stage_settled(owner, found);
  for (const auto& [owner, found] : out.gossip_discoveries) stage_settled(owner, found);
  std::sort(out.settled.begin(), out.settled.end());
  out.settled.erase(std::unique(out.settled.begin(), out.settled.end()), out.settled.end());
  for (const auto& [a, b] : out.settled) {
    if (ctx.in_sensing(a, b))
      ++states[static_cast<std::size_t>(a)].settled_per_beam[static_cast<std::size_t>(
          ctx.beam(a, b))];
    if (ctx.in_sensing(b, a))
      ++states[static_cast<std::size_t>(b)].settled_per_beam[static_cast<std::size_t>(
          ctx.beam(b, a))];
  }
  return out;
}

std::vector<int> merge_neighbor_lists(const std::vector<std::uint8_t>& own,
                                      const std::vector<std::uint8_t>& payload, int self) {
  std::vector<int> added;
  const int n = static_cast<int>(payload.size());
  for (int k = 0; k < n; ++k) {
    if (k == self) continue;
    if (payload[static_cast<std::size_t>(k)] && !own[static_cast<std::size_t>(k)])
      added.push_back(k);
  }
  return added;
}

std::vector<int> count_settled_per_beam(const NodeLayout& layout, const BeamSpec& spec,
                                        double sensing_range,
                                        const std::vector<NodeState>& states, int owner) {
  std::vector<int> counts(static_cast<std::size_t>(spec.beam_count), 0);
  const auto& me = states[static_cast<std::size_t>(owner)];
  const double sense_sq = sensing_range * sensing_range;
  for (int j = 0; j < static_cast<int>(states.size()); ++j) {
    if (j == owner) continue;
    if (!me.has(j) || !states[static_cast<std::size_t>(j)].has(owner)) continue;
    const double dx = layout.pos[static_cast<std::size_t>(j)].x -
                      layout.pos[static_cast<std::size_t>(owner)].x;
    const double dy = layout.pos[static_cast<std::size_t>(j)].y -
                      layout.pos[static_cast<std::size_t>(owner)].y;
    if (dx * dx + dy * dy > sense_sq) continue;
    ++counts[static_cast<std::size_t>(beam_index(layout, spec, owner, j))];
  }
  return counts;
}

RunStatus check_convergence(long last_discovery_slot, long slot, long warmup, long cap) {
  if (slot >= warmup && 2 * (slot - last_discovery_slot) >= slot) return RunStatus::converged;
  if (slot >= cap) return RunStatus::capped;
  return RunStatus::running;
}

std::vector<long> cumulative_discovered(const RunRecord& record, long horizon) {
  std::vector<long> out(static_cast<std::size_t>(horizon), 0);
  long total = 0;
  std::size_t next = 0;
  for (long t = 1; t <= horizon; ++t) {
    while (next < record.events.size() && record.events[next].slot == t) {
      total += record.events[next].direct + record.events[next].gossip;
      ++next;
    }
    out[static_cast<std::size_t>(t - 1)] = total;
  }
  return out;
}

}  // namespace isacnd

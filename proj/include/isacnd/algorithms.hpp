#pragma once

#include <optional>
#include <string_view>
#include <vector>

namespace isacnd {

// Every variant is a (gossip, non-reply, beam-policy) triple. The string forms below are the
// stable identifiers used in configs, CSV headers, and CLI arguments.
enum class AlgorithmId {
  cra,
  g_cra,
  nrs,
  rns,
  nrns,
  rs,
  g_nrs,
  g_rns,
  g_nrns,
  g_rs,
  q_nd,
  q_nr,
  gq_nd,
  gq_nrns,
};

enum class BeamPolicy {
  all_beams,      // uniform over every beam, radar prior ignored
  non_empty,      // uniform over beams whose radar scan saw anyone
  stop_filtered,  // uniform over beams with sensed count still above the discovered count
  q_learning,     // epsilon-greedy over learned values, all beams reachable
};

struct AlgorithmTraits {
  bool gossip;
  bool non_reply;
  BeamPolicy beam_policy;
};

AlgorithmTraits traits(AlgorithmId id);
const char* to_string(AlgorithmId id);
std::optional<AlgorithmId> algorithm_from_string(std::string_view name);
const std::vector<AlgorithmId>& all_algorithms();

inline bool uses_learning(AlgorithmId id) {
  return traits(id).beam_policy == BeamPolicy::q_learning;
}
// stop filtering and learning rewards both compare against exact sensed counts.
inline bool needs_exact_counts(AlgorithmId id) {
  const auto policy = traits(id).beam_policy;
  return policy == BeamPolicy::stop_filtered || policy == BeamPolicy::q_learning;
}

}  // namespace isacnd

#include "isacnd/algorithms.hpp"

#include <array>
#include <stdexcept>

namespace isacnd {

namespace {

struct Entry {
  AlgorithmId id;
  const char* name;
  AlgorithmTraits traits;
};

constexpr std::array<Entry, 14> kTable{{
    {AlgorithmId::cra, "CRA", {false, false, BeamPolicy::all_beams}},
    {AlgorithmId::g_cra, "G-CRA", {true, false, BeamPolicy::all_beams}},
    {AlgorithmId::nrs, "nRS", {false, true, BeamPolicy::stop_filtered}},
    {AlgorithmId::rns, "RnS", {false, false, BeamPolicy::non_empty}},
    {AlgorithmId::nrns, "nRnS", {false, true, BeamPolicy::non_empty}},
    {AlgorithmId::rs, "RS", {false, false, BeamPolicy::stop_filtered}},
    {AlgorithmId::g_nrs, "G-nRS", {true, true, BeamPolicy::stop_filtered}},
    {AlgorithmId::g_rns, "G-RnS", {true, false, BeamPolicy::non_empty}},
    {AlgorithmId::g_nrns, "G-nRnS", {true, true, BeamPolicy::non_empty}},
    {AlgorithmId::g_rs, "G-RS", {true, false, BeamPolicy::stop_filtered}},
    {AlgorithmId::q_nd, "Q-ND", {false, false, BeamPolicy::q_learning}},
    {AlgorithmId::q_nr, "Q-nR", {false, true, BeamPolicy::q_learning}},
    {AlgorithmId::gq_nd, "GQ-ND", {true, false, BeamPolicy::q_learning}},
    {AlgorithmId::gq_nrns, "GQ-nRnS", {true, true, BeamPolicy::q_learning}},
}};

const Entry& entry(AlgorithmId id) {
  for (const auto& e : kTable)
    if (e.id == id) return e;
  throw std::invalid_argument("unknown algorithm id");
}

}  // namespace

AlgorithmTraits traits(AlgorithmId id) { return entry(id).traits; }

const char* to_string(AlgorithmId id) { return entry(id).name; }

std::optional<AlgorithmId> algorithm_from_string(std::string_view name) {
  for (const auto& e : kTable)
    if (name == e.name) return e.id;
  return std::nullopt;
}

const std::vector<AlgorithmId>& all_algorithms() {
  static const std::vector<AlgorithmId> ids = [] {
    std::vector<AlgorithmId> v;
    for (const auto& e : kTable) v.push_back(e.id);
    return v;
  }();
  return ids;
}

}  // namespace isacnd

#pragma once

#include <utility>
#include <vector>

#include "isacnd/algorithms.hpp"

namespace isacnd {

// Binomial occupancy of a single beam when `balls` neighbors land independently and
// uniformly across `beams` sectors.
struct OccupancyModel {
  int balls = 0;
  int beams = 0;
  std::vector<double> pmf;           // occupancy u = 0..balls
  std::vector<double> nonempty_pmf;  // conditioned on u >= 1, entry 0 is zero
  double effective_beams = 0.0;      // beams * P(occupied)
  double mean_occupancy = 0.0;       // mean occupancy of an occupied beam
};

OccupancyModel occupancy_model(int balls, int beams);

struct AnalyticParams {
  int nodes = 2;
  int beam_count = 1;
  double p0 = 0.5;
  long horizon = 0;
};

struct AnalyticSeries {
  AlgorithmId algorithm = AlgorithmId::g_rns;
  AnalyticParams params;
  std::vector<double> direct;    // pair discovered directly by slot t (index t-1)
  std::vector<double> indirect;  // pair discovered through relays by slot t
  std::vector<double> pair;      // either way
  std::vector<double> expected;  // pair * (nodes - 1)
  long clamp_events = 0;
};

// Indirect-discovery composition: each slot every one of `relays` common neighbors forwards
// its own knowledge of the target across a fresh pairwise contact. Slot 1 starts at zero.
class GossipAccumulator {
 public:
  explicit GossipAccumulator(int relays) : relays_(relays) {}

  // direct_cum: probability of direct discovery by this slot; per_slot_pair: this slot's
  // pairwise contact probability. Returns the combined pair probability.
  double step(double direct_cum, double per_slot_pair);

  double indirect() const { return indirect_; }
  long clamp_events() const { return clamps_; }

 private:
  int relays_ = 0;
  bool first_ = true;
  double indirect_ = 0.0;
  double prev_pair_ = 0.0;
  long clamps_ = 0;
};

// Vector form of the accumulator; returns (indirect by slot, pair by slot).
std::pair<std::vector<double>, std::vector<double>> gossip_recursion(
    const std::vector<double>& direct_by_slot, const std::vector<double>& per_slot_pair,
    int relays);

// Both ends point the right way in the same slot: transmit/receive split times the chance
// each side picks the sector covering the other among its incomplete beams.
double alignment_probability(double p0, double effective_beams, double completed_i,
                             double completed_j);
// two-way version used by the time-symmetric curves
double mean_alignment_probability(double p0, double effective_beams, double completed);

// Fraction of occupied beams still incomplete.
double incomplete_beam_fraction(double effective_beams, double completed);

// Expected rivals that can jam the hello (b) or the feedback (a); the feedback side shrinks
// by the in-beam nodes that already discovered the receiver and therefore stay silent.
double hello_interferers(double mean_occupancy, double incomplete_fraction);
double feedback_interferers(double mean_occupancy, double discovered_back,
                            double incomplete_fraction);

// Constant per-slot pair probability when beams are chosen uniformly over occupied sectors.
double uniform_pair_rate(double p0, double effective_beams, double mean_occupancy);

std::vector<double> expected_discovered(const std::vector<double>& pair, int nodes);

// Closed-form mean-discovery curves for the four gossip variants; other ids are rejected.
AnalyticSeries analytic_curve(AlgorithmId id, const AnalyticParams& params);

}  // namespace isacnd

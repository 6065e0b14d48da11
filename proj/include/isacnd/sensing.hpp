#pragma once

#include <cstdint>
#include <vector>

#include "isacnd/geometry.hpp"

namespace isacnd {

enum class Resolution { low, high };

struct SensingConfig {
  double comm_range = 0.0;
  double rc_ratio = 1.0;  // radar range = rc_ratio * comm_range, in (0, 1]
  Resolution resolution = Resolution::high;
  int slot_cost = 1;  // sensing slots spent per beam
};

// Per-beam radar prior. High resolution stores exact neighbor counts; low resolution only
// keeps presence flags, and count() refuses to serve them.
class RadarList {
 public:
  RadarList() = default;
  RadarList(Resolution resolution, std::vector<int> per_beam);

  Resolution resolution() const { return resolution_; }
  int beams() const { return static_cast<int>(per_beam_.size()); }
  bool non_empty(int beam) const { return per_beam_[static_cast<std::size_t>(beam)] > 0; }
  int count(int beam) const;
  const std::vector<int>& raw() const { return per_beam_; }

 private:
  Resolution resolution_ = Resolution::high;
  std::vector<int> per_beam_;
};

struct SensingReport {
  std::vector<RadarList> lists;
  int duration = 0;  // beam_count * slot_cost, identical for every node
};

// One radar sweep per node before any handshake slot runs. Scan order does not change the
// per-beam result, so only the counts and the total duration are reported.
SensingReport run_sensing_phase(const NodeLayout& layout, const BeamSpec& spec,
                                const SensingConfig& config);

}  // namespace isacnd

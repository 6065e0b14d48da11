#include "isacnd/sensing.hpp"

#include <stdexcept>

namespace isacnd {

RadarList::RadarList(Resolution resolution, std::vector<int> per_beam)
    : resolution_(resolution), per_beam_(std::move(per_beam)) {
  if (resolution_ == Resolution::low)
    for (auto& v : per_beam_) v = v > 0 ? 1 : 0;
}

int RadarList::count(int beam) const {
  if (resolution_ != Resolution::high)
    throw std::logic_error("exact radar counts requested from a low-resolution scan");
  return per_beam_[static_cast<std::size_t>(beam)];
}

SensingReport run_sensing_phase(const NodeLayout& layout, const BeamSpec& spec,
                                const SensingConfig& config) {
  if (!(config.rc_ratio > 0.0) || config.rc_ratio > 1.0)
    throw std::invalid_argument("rc_ratio must lie in (0, 1]");
  if (config.slot_cost < 1) throw std::invalid_argument("sensing slot cost must be at least 1");
  const int n = layout.size();
  const double radar_range = config.rc_ratio * config.comm_range;
  const double range_sq = radar_range * radar_range;

  SensingReport report;
  report.duration = spec.beam_count * config.slot_cost;
  report.lists.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<int> per_beam(static_cast<std::size_t>(spec.beam_count), 0);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const double dx = layout.pos[j].x - layout.pos[i].x;
      const double dy = layout.pos[j].y - layout.pos[i].y;
      if (dx * dx + dy * dy > range_sq) continue;
      ++per_beam[static_cast<std::size_t>(beam_index(layout, spec, i, j))];
    }
    report.lists.emplace_back(config.resolution, std::move(per_beam));
  }
  return report;
}

}  // namespace isacnd

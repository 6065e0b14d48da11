#pragma once

#include <cstdint>
#include <vector>

namespace isacnd {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

struct NodeLayout {
  std::vector<Vec2> pos;
  double area_side = 0.0;
  int size() const { return static_cast<int>(pos.size()); }
};

// Sector antenna pattern shared by every node: beam k spans [k*beamwidth, (k+1)*beamwidth)
// relative to the node's reference orientation. beamwidth is canonicalized to 2*pi/beam_count
// so the beams tile the full circle exactly.
struct BeamSpec {
  double beamwidth = 0.0;
  int beam_count = 0;
  std::vector<double> orientations;  // empty: shared zero-orientation frame

  double orientation_of(int node) const {
    return orientations.empty() ? 0.0 : orientations[static_cast<std::size_t>(node)];
  }
};

BeamSpec make_beam_spec(int beam_count);
// beamwidth in degrees must divide 360 to an integer beam count.
BeamSpec beam_spec_from_degrees(double beamwidth_deg);

// bearing from -> to in [0, 2*pi), measured in the global frame; 0 for coincident points.
double bearing(const Vec2& from, const Vec2& to);

int beam_index(const NodeLayout& layout, const BeamSpec& spec, int observer, int target);

bool covers(const NodeLayout& layout, const BeamSpec& spec, int observer, int beam, int target,
            double range);

// Uniform placement over the square. Rejects n < 1 and squares whose diagonal exceeds the
// communication range, which would break the single-hop assumption.
NodeLayout place_nodes(int n, double area_side, double comm_range, std::uint64_t seed);

std::vector<double> random_orientations(int n, std::uint64_t seed);

}  // namespace isacnd

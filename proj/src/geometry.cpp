#include "isacnd/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "isacnd/rng.hpp"

namespace isacnd {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

BeamSpec make_beam_spec(int beam_count) {
  if (beam_count < 1) throw std::invalid_argument("beam count must be at least 1");
  BeamSpec spec;
  spec.beam_count = beam_count;
  spec.beamwidth = kTwoPi / beam_count;
  return spec;
}

BeamSpec beam_spec_from_degrees(double beamwidth_deg) {
  if (!(beamwidth_deg > 0.0) || beamwidth_deg > 360.0)
    throw std::invalid_argument("beamwidth must lie in (0, 360] degrees");
  const double count = 360.0 / beamwidth_deg;
  const double rounded = std::round(count);
  if (std::abs(count - rounded) > 1e-9)
    throw std::invalid_argument("beamwidth must divide 360 degrees into an integer beam count");
  return make_beam_spec(static_cast<int>(rounded));
}

double bearing(const Vec2& from, const Vec2& to) {
  const double angle = std::atan2(to.y - from.y, to.x - from.x);
  double wrapped = angle < 0.0 ? angle + kTwoPi : angle;
  if (wrapped >= kTwoPi) wrapped = 0.0;
  return wrapped;
}

int beam_index(const NodeLayout& layout, const BeamSpec& spec, int observer, int target) {
  const Vec2& a = layout.pos[static_cast<std::size_t>(observer)];
  const Vec2& b = layout.pos[static_cast<std::size_t>(target)];
  double phi = bearing(a, b) - spec.orientation_of(observer);
  phi = std::fmod(phi, kTwoPi);
  if (phi < 0.0) phi += kTwoPi;
  int k = static_cast<int>(phi / spec.beamwidth);
  if (k >= spec.beam_count) k = 0;  // guards the phi ~ 2*pi float edge
  return k;
}

bool covers(const NodeLayout& layout, const BeamSpec& spec, int observer, int beam, int target,
            double range) {
  const Vec2& a = layout.pos[static_cast<std::size_t>(observer)];
  const Vec2& b = layout.pos[static_cast<std::size_t>(target)];
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  if (dx * dx + dy * dy > range * range) return false;
  return beam_index(layout, spec, observer, target) == beam;
}

NodeLayout place_nodes(int n, double area_side, double comm_range, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("node count must be at least 1");
  if (!(area_side > 0.0)) throw std::invalid_argument("area side must be positive");
  const double diagonal = area_side * std::sqrt(2.0);
  if (diagonal > comm_range * (1.0 + 1e-12))
    throw std::invalid_argument("area diagonal exceeds communication range; network is not single-hop");
  NodeLayout layout;
  layout.area_side = area_side;
  layout.pos.resize(static_cast<std::size_t>(n));
  std::mt19937_64 rng(seed);
  for (auto& p : layout.pos) {
    p.x = uniform01(rng) * area_side;
    p.y = uniform01(rng) * area_side;
  }
  return layout;
}

std::vector<double> random_orientations(int n, std::uint64_t seed) {
  std::vector<double> out(static_cast<std::size_t>(n));
  std::mt19937_64 rng(seed);
  for (auto& v : out) v = uniform01(rng) * kTwoPi;
  return out;
}

}  // namespace isacnd

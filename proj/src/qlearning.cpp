#include "isacnd/qlearning.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "isacnd/rng.hpp"

namespace isacnd {

bool QTable::all_zero() const {
  return std::all_of(values.begin(), values.end(), [](double v) { return v == 0.0; });
}

double QTable::row_max(Transceiver s) const {
  const auto begin = values.begin() + static_cast<long>(static_cast<int>(s) * beams);
  return *std::max_element(begin, begin + beams);
}

double ExplorationSchedule::at(long slot) const { return eps0 * std::pow(decay, slot); }

int poisson_mode(double lambda) {
  if (!(lambda >= 0.0)) throw std::invalid_argument("lambda must be non-negative");
  // modes are floor(lambda), plus lambda - 1 when lambda is integral; the larger one wins.
  return static_cast<int>(std::floor(lambda));
}

int reward_threshold(int nodes, int beams) {
  if (nodes < 1 || beams < 1) throw std::invalid_argument("nodes and beams must be positive");
  return poisson_mode(static_cast<double>(nodes) / beams);
}

int reward(int sensed, int discovered, int threshold) {
  if (sensed > discovered) return 2;
  return discovered <= threshold ? 1 : -1;
}

void q_update(QTable& q, Transceiver s, int a, int r, Transceiver s_next, double alpha,
              double gamma) {
  double& cell = q.at(s, a);
  cell += alpha * (r + gamma * q.row_max(s_next) - cell);
}

int select_action(const QTable& q, Transceiver s, double eps, std::mt19937_64& rng) {
  if (q.all_zero()) return uniform_int(rng, q.beams);
  if (uniform01(rng) < eps) return uniform_int(rng, q.beams);
  const double best = q.row_max(s);
  int ties = 0;
  for (int a = 0; a < q.beams; ++a)
    if (q.at(s, a) == best) ++ties;
  if (ties == 1) {
    for (int a = 0; a < q.beams; ++a)
      if (q.at(s, a) == best) return a;
  }
  int pick = uniform_int(rng, ties);
  for (int a = 0; a < q.beams; ++a) {
    if (q.at(s, a) != best) continue;
    if (pick == 0) return a;
    --pick;
  }
  return q.beams - 1;  // unreachable
}

}  // namespace isacnd

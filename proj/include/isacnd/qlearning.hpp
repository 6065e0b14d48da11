#pragma once

#include <random>
#include <vector>

namespace isacnd {

enum class Transceiver { receive = 0, transmit = 1 };

// State-action values for one node: two rows (receive, transmit) by beam.
struct QTable {
  int beams = 0;
  std::vector<double> values;  // row-major, 2 * beams, zero-initialized

  QTable() = default;
  explicit QTable(int beam_count)
      : beams(beam_count), values(static_cast<std::size_t>(2 * beam_count), 0.0) {}

  double& at(Transceiver s, int a) {
    return values[static_cast<std::size_t>(static_cast<int>(s) * beams + a)];
  }
  double at(Transceiver s, int a) const {
    return values[static_cast<std::size_t>(static_cast<int>(s) * beams + a)];
  }
  bool all_zero() const;
  double row_max(Transceiver s) const;
};

struct ExplorationSchedule {
  double eps0 = 0.5;
  double decay = 0.995;
  double at(long slot) const;  // eps0 * decay^slot
};

// Mode of a Poisson(lambda) distribution; the integer-lambda tie resolves to lambda itself.
int poisson_mode(double lambda);

// Per-beam occupancy a discovered-count is judged against; lambda defaults to nodes/beams.
int reward_threshold(int nodes, int beams);

// 2 when the sensed count still exceeds the discovered count, 1 when the beam is exhausted
// but lightly populated, -1 when an exhausted beam is crowded past the threshold.
int reward(int sensed, int discovered, int threshold);

void q_update(QTable& q, Transceiver s, int a, int r, Transceiver s_next, double alpha,
              double gamma);

// Epsilon-greedy over the row for s: an untrained all-zero table picks uniformly no matter
// what epsilon says; otherwise explore with probability eps (uniform over every beam) and
// exploit the row argmax the rest of the time, breaking ties uniformly.
int select_action(const QTable& q, Transceiver s, double eps, std::mt19937_64& rng);

}  // namespace isacnd

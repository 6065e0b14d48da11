#include "isacnd/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace isacnd {

namespace {

double clamp_unit(double v, long& clamps) {
  if (v < 0.0 || v > 1.0) {
    ++clamps;
    return std::clamp(v, 0.0, 1.0);
  }
  return v;
}

void validate(const AnalyticParams& params) {
  if (params.nodes < 2) throw std::invalid_argument("analytic curves need at least 2 nodes");
  if (params.beam_count < 1) throw std::invalid_argument("beam count must be at least 1");
  if (!(params.p0 > 0.0) || !(params.p0 < 1.0))
    throw std::invalid_argument("p0 must lie strictly inside (0, 1)");
  if (params.horizon < 0) throw std::invalid_argument("horizon must be non-negative");
}

}  // namespace

OccupancyModel occupancy_model(int balls, int beams) {
  if (balls < 1 || beams < 1)
    throw std::invalid_argument("occupancy model needs at least one ball and one beam");
  OccupancyModel model;
  model.balls = balls;
  model.beams = beams;
  model.pmf.assign(static_cast<std::size_t>(balls) + 1, 0.0);

  const double p = 1.0 / beams;
  const double q = 1.0 - p;
  if (beams == 1) {
    model.pmf[static_cast<std::size_t>(balls)] = 1.0;
  } else {
    // binomial recurrence, numerically stable at the sizes used here
    double v = std::pow(q, balls);
    for (int u = 0; u <= balls; ++u) {
      model.pmf[static_cast<std::size_t>(u)] = v;
      v *= (static_cast<double>(balls - u) / (u + 1)) * (p / q);
    }
  }

  const double occupied = 1.0 - model.pmf[0];
  model.effective_beams = beams * occupied;
  model.nonempty_pmf.assign(model.pmf.size(), 0.0);
  for (std::size_t u = 1; u < model.pmf.size(); ++u)
    model.nonempty_pmf[u] = model.pmf[u] / occupied;
  double mean = 0.0;
  for (std::size_t u = 1; u < model.nonempty_pmf.size(); ++u)
    mean += static_cast<double>(u) * model.nonempty_pmf[u];
  model.mean_occupancy = mean;
  return model;
}

double GossipAccumulator::step(double direct_cum, double per_slot_pair) {
  if (first_) {
    first_ = false;
  } else {
    const double forwarded =
        clamp_unit(relays_ * per_slot_pair * prev_pair_, clamps_);
    indirect_ += (1.0 - indirect_) * forwarded;
  }
  const double pair = direct_cum + (1.0 - direct_cum) * indirect_;
  prev_pair_ = pair;
  return pair;
}

std::pair<std::vector<double>, std::vector<double>> gossip_recursion(
    const std::vector<double>& direct_by_slot, const std::vector<double>& per_slot_pair,
    int relays) {
  if (direct_by_slot.size() != per_slot_pair.size())
    throw std::invalid_argument("direct and per-slot series must have equal length");
  GossipAccumulator acc(relays);
  std::vector<double> indirect(direct_by_slot.size());
  std::vector<double> pair(direct_by_slot.size());
  for (std::size_t i = 0; i < direct_by_slot.size(); ++i) {
    pair[i] = acc.step(direct_by_slot[i], per_slot_pair[i]);
    indirect[i] = acc.indirect();
  }
  return {std::move(indirect), std::move(pair)};
}

double alignment_probability(double p0, double effective_beams, double completed_i,
                             double completed_j) {
  return p0 * (1.0 - p0) / ((effective_beams - completed_i) * (effective_beams - completed_j));
}

double mean_alignment_probability(double p0, double effective_beams, double completed) {
  const double open = effective_beams - completed;
  return 2.0 * p0 * (1.0 - p0) / (open * open);
}

double incomplete_beam_fraction(double effective_beams, double completed) {
  return (effective_beams - completed) / effective_beams;
}

double hello_interferers(double mean_occupancy, double incomplete_fraction) {
  return (mean_occupancy - 1.0) * incomplete_fraction;
}

double feedback_interferers(double mean_occupancy, double discovered_back,
                            double incomplete_fraction) {
  return std::max(mean_occupancy - 1.0 - discovered_back, 0.0) * incomplete_fraction;
}

double uniform_pair_rate(double p0, double effective_beams, double mean_occupancy) {
  const double b = effective_beams;
  return 2.0 * (1.0 - p0) * p0 / (b * b) * std::pow(1.0 - (1.0 - p0) / b, mean_occupancy - 1.0) *
         std::pow(1.0 - p0 / b, mean_occupancy - 1.0);
}

std::vector<double> expected_discovered(const std::vector<double>& pair, int nodes) {
  std::vector<double> out(pair.size());
  for (std::size_t i = 0; i < pair.size(); ++i) out[i] = pair[i] * (nodes - 1);
  return out;
}

namespace {

AnalyticSeries make_series(AlgorithmId id, const AnalyticParams& params) {
  AnalyticSeries series;
  series.algorithm = id;
  series.params = params;
  const auto size = static_cast<std::size_t>(params.horizon);
  series.direct.resize(size);
  series.indirect.resize(size);
  series.pair.resize(size);
  series.expected.resize(size);
  return series;
}

// Constant-rate pipeline shared by the variants whose per-slot pair probability never moves.
AnalyticSeries constant_rate_curve(AlgorithmId id, const AnalyticParams& params, double rate) {
  AnalyticSeries series = make_series(id, params);
  GossipAccumulator acc(params.nodes - 2);
  double survival = 1.0;
  for (long t = 1; t <= params.horizon; ++t) {
    survival *= 1.0 - rate;
    const double direct = 1.0 - survival;
    const double pair = acc.step(direct, rate);
    const auto i = static_cast<std::size_t>(t - 1);
    series.direct[i] = direct;
    series.indirect[i] = acc.indirect();
    series.pair[i] = pair;
    series.expected[i] = pair * (params.nodes - 1);
  }
  series.clamp_events = acc.clamp_events();
  return series;
}

// Beam selection restricted to incomplete sectors. The completed-beam mass advances with the
// running pair probability: a beam holding u neighbors is exhausted with probability
// pair^u, and the per-slot rate follows with the non-reply term optionally thinning the
// feedback-side rivals. The choice denominator never drops below one beam.
AnalyticSeries completion_tracking_curve(AlgorithmId id, const AnalyticParams& params,
                                         bool non_reply) {
  const OccupancyModel occ = occupancy_model(params.nodes - 1, params.beam_count);
  const double b = occ.effective_beams;
  const double m = occ.mean_occupancy;

  AnalyticSeries series = make_series(id, params);
  GossipAccumulator acc(params.nodes - 2);
  double survival = 1.0;
  double prev_pair = 0.0;
  for (long t = 1; t <= params.horizon; ++t) {
    double exhausted_share = 0.0;
    for (std::size_t u = 1; u < occ.nonempty_pmf.size(); ++u)
      exhausted_share += occ.nonempty_pmf[u] * std::pow(prev_pair, static_cast<double>(u));
    const double completed = b * exhausted_share;
    const double incomplete = incomplete_beam_fraction(b, completed);
    const double open = std::max(b - completed, 1.0);

    const double discovered_back = non_reply ? (m - 1.0) * prev_pair : 0.0;
    const double a = feedback_interferers(m, discovered_back, incomplete);
    const double h = hello_interferers(m, incomplete);
    double rate = 2.0 * params.p0 * (1.0 - params.p0) / (open * open) *
                  std::pow(1.0 - (1.0 - params.p0) / open, a) *
                  std::pow(1.0 - params.p0 / open, h);
    rate = clamp_unit(rate, series.clamp_events);

    survival *= 1.0 - rate;
    const double direct = 1.0 - survival;
    const double pair = acc.step(direct, rate);
    const auto i = static_cast<std::size_t>(t - 1);
    series.direct[i] = direct;
    series.indirect[i] = acc.indirect();
    series.pair[i] = pair;
    series.expected[i] = pair * (params.nodes - 1);
    prev_pair = pair;
  }
  series.clamp_events += acc.clamp_events();
  return series;
}

// Non-reply without stop filtering: the feedback-side rivals shrink as in-beam nodes learn
// the receiver, which makes the rate drift over one beam's discovery span. The drift is
// folded into a constant by the expected-interval argument (a phase at rate p lasts 1/p
// slots on average, so the time average is the harmonic mean across phases), then averaged
// over the occupancy of the beam actually containing the partner.
AnalyticSeries interval_averaged_curve(AlgorithmId id, const AnalyticParams& params) {
  const OccupancyModel occ = occupancy_model(params.nodes - 1, params.beam_count);
  const double b = occ.effective_beams;
  const double m = occ.mean_occupancy;
  const double p0 = params.p0;

  const double base = (1.0 - p0) * p0 / (b * b) * std::pow(1.0 - p0 / b, m - 1.0);
  double one_way = 0.0;
  for (std::size_t u = 1; u < occ.nonempty_pmf.size(); ++u) {
    double span = 0.0;
    for (std::size_t discovered = 0; discovered < u; ++discovered) {
      const double phase_rate =
          base * std::pow(1.0 - (1.0 - p0) / b,
                          static_cast<double>(u) - 1.0 - static_cast<double>(discovered));
      span += 1.0 / phase_rate;
    }
    one_way += occ.nonempty_pmf[u] * (static_cast<double>(u) / span);
  }
  return constant_rate_curve(id, params, 2.0 * one_way);
}

}  // namespace

AnalyticSeries analytic_curve(AlgorithmId id, const AnalyticParams& params) {
  validate(params);
  switch (id) {
    case AlgorithmId::g_rns: {
      const OccupancyModel occ = occupancy_model(params.nodes - 1, params.beam_count);
      return constant_rate_curve(
          id, params, uniform_pair_rate(params.p0, occ.effective_beams, occ.mean_occupancy));
    }
    case AlgorithmId::g_nrs: return completion_tracking_curve(id, params, true);
    case AlgorithmId::g_rs: return completion_tracking_curve(id, params, false);
    case AlgorithmId::g_nrns: return interval_averaged_curve(id, params);
    default:
      throw std::invalid_argument("no closed-form curve for this algorithm");
  }
}

}  // namespace isacnd

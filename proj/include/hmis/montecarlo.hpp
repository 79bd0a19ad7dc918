#pragma once

#include <cstdint>

#include "hmis/analysis.hpp"
#include "hmis/hypergraph.hpp"

namespace hmis {

/// Two-sided 99% normal quantile.
inline constexpr double kZ99 = 2.5758293035489004;

struct WilsonInterval {
  double lower = 0.0;
  double upper = 1.0;
};

/// Wilson score interval for `successes` out of `trials`.
WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = kZ99);

struct TailEstimate {
  std::uint64_t trials = 0;
  double threshold = 0.0;
  std::uint64_t exceed_count = 0;
  double point_estimate = 0.0;
  double wilson_lower_99 = 0.0;
  double wilson_upper_99 = 1.0;
};

/// Trial t colors vertex v blue iff CounterStream(seed).derive(t).bernoulli(v, p).
/// Counts trials with eval_S > threshold.
TailEstimate tail_experiment(const WeightedHypergraph& wh, double p, double threshold, std::uint64_t trials,
                             std::uint64_t seed, std::size_t threads = 1);

/// Pr[E_X | C_X]: x is force-marked, every other vertex marked with
/// probability p; counts trials where some edge meeting x is fully marked.
/// Requires that no edge lies inside x and |x| < dim(h).
TailEstimate estimate_unmark_given_marked(const Hypergraph& h, const VertexSet& x, double p, std::uint64_t trials,
                                          std::uint64_t seed, std::size_t threads = 1);

struct NeighborhoodHit {
  TailEstimate estimate;
  /// (1/4) (epsilon / a)^j with epsilon = d_j(x,h) / Δ(h), a = 2^(d+1).
  double paper_bound = 0.0;
  double epsilon = 0.0;
  double a = 0.0;
};

/// Pr[some Y in N_j(x,h) is fully marked and none of it is unmarked] under
/// one full marking round with probability p.
NeighborhoodHit estimate_neighborhood_hit(const Hypergraph& h, const VertexSet& x, std::size_t j, double p,
                                          std::uint64_t trials, std::uint64_t seed, std::size_t threads = 1);

}  // namespace hmis

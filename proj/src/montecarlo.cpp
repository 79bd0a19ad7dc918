#include "hmis/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "hmis/degree.hpp"
#include "hmis/error.hpp"
#include "hmis/parallel.hpp"
#include "hmis/rng.hpp"

namespace hmis {

namespace {

// Counts trials for which hit(stream_t) holds. Blocks have a fixed size so
// the reduction is the same for any thread count.
template <class Hit>
std::uint64_t count_hits(std::uint64_t trials, std::uint64_t seed, std::size_t threads, Hit&& hit) {
  constexpr std::uint64_t kBlock = 1024;
  const std::size_t blocks = static_cast<std::size_t>((trials + kBlock - 1) / kBlock);
  std::vector<std::uint64_t> per_block(blocks, 0);
  const CounterStream base(seed);
  parallel_for(blocks, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t b = begin; b < end; ++b) {
      const std::uint64_t lo = b * kBlock;
      const std::uint64_t hi = std::min(trials, lo + kBlock);
      std::uint64_t c = 0;
      for (std::uint64_t t = lo; t < hi; ++t) c += hit(base.derive(t)) ? 1 : 0;
      per_block[b] = c;
    }
  });
  return std::accumulate(per_block.begin(), per_block.end(), std::uint64_t{0});
}

TailEstimate summarize(std::uint64_t hits, std::uint64_t trials, double threshold) {
  TailEstimate est;
  est.trials = trials;
  est.threshold = threshold;
  est.exceed_count = hits;
  est.point_estimate = static_cast<double>(hits) / static_cast<double>(trials);
  const auto ci = wilson_interval(hits, trials);
  est.wilson_lower_99 = ci.lower;
  est.wilson_upper_99 = ci.upper;
  return est;
}

void require_trials(std::uint64_t trials) {
  if (trials < 1) throw Error(Errc::Precondition, "at least one trial required");
}

}  // namespace

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) return {};
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (phat + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

TailEstimate tail_experiment(const WeightedHypergraph& wh, double p, double threshold, std::uint64_t trials,
                             std::uint64_t seed, std::size_t threads) {
  require_trials(trials);
  const auto& edges = wh.base().edges();
  const auto& w = wh.weights();
  const std::uint64_t hits = count_hits(trials, seed, threads, [&](const CounterStream& s) {
    double sum = 0.0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto& e = edges[i];
      if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return s.bernoulli(v, p); })) sum += w[i];
    }
    return sum > threshold;
  });
  return summarize(hits, trials, threshold);
}

TailEstimate estimate_unmark_given_marked(const Hypergraph& h, const VertexSet& x, double p, std::uint64_t trials,
                                          std::uint64_t seed, std::size_t threads) {
  require_trials(trials);
  if (x.size() >= h.dimension()) throw Error(Errc::Precondition, "need |x| < dimension");
  std::vector<VertexSet> touching;
  for (const auto& e : h.edges()) {
    if (e.is_subset_of(x)) throw Error(Errc::Precondition, "an edge lies inside x");
    if (e.intersects(x)) touching.push_back(e);
  }
  const std::uint64_t hits = count_hits(trials, seed, threads, [&](const CounterStream& s) {
    return std::any_of(touching.begin(), touching.end(), [&](const VertexSet& e) {
      return std::all_of(e.begin(), e.end(), [&](Vertex v) { return x.contains(v) || s.bernoulli(v, p); });
    });
  });
  return summarize(hits, trials, 0.0);
}

NeighborhoodHit estimate_neighborhood_hit(const Hypergraph& h, const VertexSet& x, std::size_t j, double p,
                                          std::uint64_t trials, std::uint64_t seed, std::size_t threads) {
  require_trials(trials);
  const std::vector<VertexSet> ys = neighborhood(h, x, j);
  if (ys.empty()) throw Error(Errc::Precondition, "N_j(x) is empty");

  // Only edges meeting some Y can unmark a vertex of Y.
  VertexSet cover;
  for (const auto& y : ys) cover = set_union(cover, y);
  std::vector<VertexSet> relevant;
  for (const auto& e : h.edges()) {
    if (e.intersects(cover)) relevant.push_back(e);
  }

  const std::uint64_t hits = count_hits(trials, seed, threads, [&](const CounterStream& s) {
    auto marked = [&](Vertex v) { return s.bernoulli(v, p); };
    std::vector<Vertex> un;
    for (const auto& e : relevant) {
      if (std::all_of(e.begin(), e.end(), marked)) un.insert(un.end(), e.begin(), e.end());
    }
    const VertexSet unmarked = VertexSet::from_unsorted(std::move(un));
    return std::any_of(ys.begin(), ys.end(), [&](const VertexSet& y) {
      return std::all_of(y.begin(), y.end(), [&](Vertex v) { return marked(v) && !unmarked.contains(v); });
    });
  });

  NeighborhoodHit out;
  out.estimate = summarize(hits, trials, 0.0);
  const DegreeProfile prof = degree_profile(h);
  const double dj = NormalizedDegree{ys.size(), static_cast<std::uint32_t>(j)}.value();
  out.epsilon = dj / prof.delta;
  out.a = std::ldexp(1.0, static_cast<int>(prof.dim) + 1);
  out.paper_bound = 0.25 * std::pow(out.epsilon / out.a, static_cast<double>(j));
  return out;
}

}  // namespace hmis

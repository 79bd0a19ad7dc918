#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hmis/hypergraph.hpp"
#include "hmis/rng.hpp"

namespace hmis {

enum class PMode {
  /// Δ and p computed once before the first round, as the pseudocode reads.
  Fixed,
  /// Δ and p recomputed from each round-start hypergraph.
  Recompute,
};

enum class SolverStatus { Ok, RoundLimitExceeded };

struct BlConfig {
  std::uint64_t seed = 0;
  PMode p_mode = PMode::Recompute;
  std::optional<double> p_override;
  /// Unset means 200 * (1 + ceil(log2 n))^3.
  std::optional<std::size_t> max_rounds;
  /// Marking parallelism; 0 uses every hardware thread. Never affects output.
  std::size_t threads = 1;
};

/// One mark / unmark / add / cleanup iteration.
struct BlRoundRecord {
  std::size_t round = 0;
  VertexSet marked;
  /// Marked vertices lying in some fully marked edge.
  VertexSet unmarked;
  VertexSet added;
  /// Vertices dropped by singleton-edge cleanup; never part of the MIS.
  VertexSet excluded;
  std::size_t remaining_vertices = 0;
  std::size_t remaining_edges = 0;
  double delta = 0.0;
  double p_used = 0.0;
};

struct BlResult {
  VertexSet mis;
  std::vector<BlRoundRecord> rounds;
  SolverStatus status = SolverStatus::Ok;
};

struct BlStep {
  VertexSet added;
  VertexSet unmarked;
  VertexSet excluded;
  Hypergraph next;
};

/// Deterministic half of a round given the marked set: unmark every fully
/// marked edge, add the survivors, shrink edges, drop superset edges, then
/// remove singleton edges together with their vertex.
BlStep bl_step(const Hypergraph& h, const VertexSet& marked);

/// Marks each active vertex with probability p using stream.bernoulli(v, p).
VertexSet draw_marks(const Hypergraph& h, double p, const CounterStream& stream, std::size_t threads = 1);

struct BlRoundOutcome {
  /// round and delta are left for the caller to fill.
  BlRoundRecord record;
  Hypergraph next;
};

/// Marks with probability p, then applies bl_step.
BlRoundOutcome bl_round(const Hypergraph& h, double p, const CounterStream& stream, std::size_t threads = 1);

/// p = 1 / (2^(d+1) Δ).
double bl_probability(std::size_t dim, double delta);

std::size_t default_bl_max_rounds(std::size_t n);

/// Cleanup applied before the first round: normalization plus singleton
/// removal, so round-start hypergraphs never carry singleton edges.
BlStep bl_prepare(const Hypergraph& h);

BlResult run_bl(const Hypergraph& h, const BlConfig& cfg);

}  // namespace hmis

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hmis/bl.hpp"
#include "hmis/hypergraph.hpp"

namespace hmis {

enum class FailPolicy {
  /// Throw DimensionGateExhausted.
  Abort,
  /// Solve the oversized induced hypergraph with greedy for that round.
  FallbackGreedy,
};

struct SblConfig {
  std::uint64_t seed = 0;
  std::optional<double> alpha_override;
  std::optional<std::size_t> d_cap_override;
  std::optional<double> p_override;
  std::optional<std::size_t> stop_threshold_override;
  std::size_t max_retries_per_round = 20;
  /// Unset means ceil(2 log2 n / p).
  std::optional<std::size_t> max_rounds;
  FailPolicy fail_policy = FailPolicy::Abort;
  /// Verify after every round that the accumulated blue set is independent
  /// in the input hypergraph.
  bool check_invariants = false;
  std::size_t threads = 1;
};

/// Parameters fixed once from the initial vertex count.
struct SblParams {
  double alpha = 0.0;
  double p = 0.0;
  /// Raw value of log log n / (4 log log log n); NaN when undefined.
  double d_formula = 0.0;
  std::size_t d = 3;
  std::size_t stop_threshold = 0;
  std::size_t max_rounds = 0;
  double beta = 0.0;
  /// m <= n^beta, the edge-count regime the running-time analysis assumes.
  bool within_edge_bound = false;
};

/// Base-2 logs throughout. d is clamped to at least 3 unless overridden.
/// Throws DegenerateParams when p cannot be derived and is not overridden.
SblParams derive_params(std::size_t n, std::size_t m, const SblConfig& cfg);

enum class LoopExit { NotEntered, StopThreshold, MaxRounds };
enum class FinalPhase { GreedyRan, BlDirectRan };

struct SblRoundRecord {
  std::size_t round = 0;
  VertexSet sampled;
  std::size_t induced_edges = 0;
  std::size_t induced_dim = 0;
  std::size_t retries = 0;
  /// True when the dimension gate was never passed and greedy solved the
  /// induced hypergraph instead of BL.
  bool gate_fallback = false;
  std::size_t bl_rounds = 0;
  SolverStatus bl_status = SolverStatus::Ok;
  VertexSet blue;
  VertexSet red;
  std::size_t edges_removed_red = 0;
  std::size_t edges_shrunk = 0;
  std::size_t remaining_n = 0;
  std::size_t remaining_m = 0;
};

struct SblResult {
  VertexSet mis;
  std::vector<SblRoundRecord> rounds;
  FinalPhase fallback = FinalPhase::GreedyRan;
  LoopExit loop_exit = LoopExit::NotEntered;
  SolverStatus status = SolverStatus::Ok;
  SblParams params;
  std::size_t retries_total = 0;
  /// Present on the BL-direct path.
  std::optional<BlResult> direct;
};

struct SampleOutcome {
  Hypergraph next;
  std::size_t edges_removed_red = 0;
  std::size_t edges_shrunk = 0;
};

/// The filtering half of a round: drop every edge meeting sampled \ blue,
/// shrink the rest by blue, remove the sample from the vertex set and
/// normalize. Throws InternalInvariant if an edge would vanish.
SampleOutcome apply_sample(const Hypergraph& h, const VertexSet& sampled, const VertexSet& blue);

struct SblRoundOutcome {
  SblRoundRecord record;
  Hypergraph next;
};

/// One sample-solve-filter round. Resamples while the induced dimension
/// exceeds d, then applies the fail policy. Randomness is keyed by
/// (seed, round, retry, vertex).
SblRoundOutcome sbl_round(const Hypergraph& h, const SblParams& params, const SblConfig& cfg, std::size_t round);

SblResult run_sbl(const Hypergraph& h, const SblConfig& cfg);

std::string_view to_string(FailPolicy p);
std::string_view to_string(LoopExit e);
std::string_view to_string(FinalPhase f);
std::string_view to_string(SolverStatus s);

}  // namespace hmis

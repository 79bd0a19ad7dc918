#include "hmis/sbl.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hmis/baseline.hpp"
#include "hmis/error.hpp"

namespace hmis {

namespace {

constexpr std::uint64_t kInnerBlTag = 0x424c494e4e4552ULL;
constexpr std::uint64_t kDirectBlTag = 0x424c444952454354ULL;

}  // namespace

SblParams derive_params(std::size_t n, std::size_t m, const SblConfig& cfg) {
  if (n < 2) throw Error(Errc::Precondition, "parameter derivation needs n >= 2");
  if (cfg.alpha_override && !(*cfg.alpha_override > 0.0)) throw Error(Errc::Precondition, "alpha must be > 0");
  if (cfg.d_cap_override && *cfg.d_cap_override < 2) throw Error(Errc::Precondition, "d_cap must be >= 2");
  if (cfg.p_override && !(*cfg.p_override > 0.0 && *cfg.p_override <= 1.0)) {
    throw Error(Errc::Precondition, "p must lie in (0, 1]");
  }

  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double log1 = std::log2(static_cast<double>(n));
  const double log2v = std::log2(log1);
  const double log3 = log2v > 0.0 ? std::log2(log2v) : -std::numeric_limits<double>::infinity();
  const bool regime = log3 > 0.0;

  SblParams out;
  out.alpha = cfg.alpha_override.value_or(regime ? 1.0 / log3 : nan);
  if (cfg.p_override) {
    out.p = *cfg.p_override;
  } else {
    if (std::isnan(out.alpha)) {
      throw Error(Errc::DegenerateParams,
                  "log log log n <= 0 at n=" + std::to_string(n) + "; override --p or alpha");
    }
    out.p = std::pow(static_cast<double>(n), -out.alpha);
    if (!(out.p > 0.0 && out.p < 1.0)) {
      throw Error(Errc::DegenerateParams, "derived p=" + std::to_string(out.p) + " is not in (0, 1)");
    }
  }

  out.d_formula = regime ? log2v / (4.0 * log3) : nan;
  if (cfg.d_cap_override) {
    out.d = *cfg.d_cap_override;
  } else {
    out.d = std::isnan(out.d_formula) ? 3 : std::max<std::size_t>(3, static_cast<std::size_t>(std::floor(out.d_formula)));
  }
  out.stop_threshold = cfg.stop_threshold_override.value_or(static_cast<std::size_t>(std::ceil(1.0 / (out.p * out.p))));
  out.max_rounds =
      cfg.max_rounds.value_or(std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(2.0 * log1 / out.p))));
  if (out.max_rounds < 1) throw Error(Errc::Precondition, "max_rounds must be at least 1");

  out.beta = regime ? log2v / (8.0 * log3 * log3) : nan;
  out.within_edge_bound = regime && (m == 0 || std::log2(static_cast<double>(m)) <= out.beta * log1);
  return out;
}

SampleOutcome apply_sample(const Hypergraph& h, const VertexSet& sampled, const VertexSet& blue) {
  std::vector<char> state(h.universe() + 1, 0);  // 1 blue, 2 red
  for (Vertex v : sampled) state[v] = 2;
  for (Vertex v : blue) state[v] = 1;

  SampleOutcome out;
  std::vector<VertexSet> edges;
  edges.reserve(h.num_edges());
  for (const auto& e : h.edges()) {
    if (std::any_of(e.begin(), e.end(), [&](Vertex v) { return state[v] == 2; })) {
      ++out.edges_removed_red;
      continue;
    }
    std::vector<Vertex> rest;
    for (Vertex v : e) {
      if (state[v] != 1) rest.push_back(v);
    }
    if (rest.empty()) throw Error(Errc::InternalInvariant, "an edge became fully blue");
    if (rest.size() < e.size()) ++out.edges_shrunk;
    edges.push_back(VertexSet::from_sorted(std::move(rest)));
  }
  out.next = normalize(Hypergraph(h.universe(), set_difference(h.vertices(), sampled), std::move(edges)));
  return out;
}

SblRoundOutcome sbl_round(const Hypergraph& h, const SblParams& params, const SblConfig& cfg, std::size_t round) {
  const CounterStream round_stream = CounterStream(cfg.seed).derive(round);
  SblRoundRecord rec;
  rec.round = round;

  Hypergraph induced;
  bool passed = false;
  for (std::size_t attempt = 0; attempt <= cfg.max_retries_per_round; ++attempt) {
    rec.retries = attempt;
    rec.sampled = draw_marks(h, params.p, round_stream.derive(attempt), cfg.threads);
    induced = induce(h, rec.sampled);
    if (induced.dimension() <= params.d) {
      passed = true;
      break;
    }
  }
  rec.induced_edges = induced.num_edges();
  rec.induced_dim = induced.dimension();

  if (passed) {
    BlConfig inner;
    inner.seed = round_stream.derive(kInnerBlTag).key();
    inner.threads = cfg.threads;
    BlResult bl = run_bl(induced, inner);
    rec.bl_rounds = bl.rounds.size();
    rec.bl_status = bl.status;
    rec.blue = std::move(bl.mis);
  } else if (cfg.fail_policy == FailPolicy::Abort) {
    throw Error(Errc::DimensionGateExhausted, "round " + std::to_string(round) + ": induced dimension stayed above " +
                                                  std::to_string(params.d) + " after " +
                                                  std::to_string(cfg.max_retries_per_round) + " retries");
  } else {
    rec.gate_fallback = true;
    rec.blue = greedy_mis(induced, VertexOrder::ascending(induced));
  }
  rec.red = set_difference(rec.sampled, rec.blue);

  SampleOutcome filtered = apply_sample(h, rec.sampled, rec.blue);
  rec.edges_removed_red = filtered.edges_removed_red;
  rec.edges_shrunk = filtered.edges_shrunk;
  rec.remaining_n = filtered.next.num_vertices();
  rec.remaining_m = filtered.next.num_edges();
  return {std::move(rec), std::move(filtered.next)};
}

SblResult run_sbl(const Hypergraph& h, const SblConfig& cfg) {
  const Hypergraph input = normalize(h);
  SblResult result;
  if (input.num_vertices() < 2) {
    result.mis = greedy_mis(input, VertexOrder::ascending(input));
    return result;
  }
  result.params = derive_params(input.num_vertices(), input.num_edges(), cfg);
  const SblParams& params = result.params;

  if (input.dimension() <= params.d) {
    BlConfig direct;
    direct.seed = CounterStream(cfg.seed).derive(kDirectBlTag).key();
    direct.threads = cfg.threads;
    BlResult bl = run_bl(input, direct);
    result.mis = bl.mis;
    result.status = bl.status;
    result.fallback = FinalPhase::BlDirectRan;
    result.direct = std::move(bl);
    return result;
  }

  Hypergraph current = input;
  VertexSet blue;
  std::size_t round = 0;
  while (current.num_vertices() >= params.stop_threshold) {
    if (round == params.max_rounds) {
      result.loop_exit = LoopExit::MaxRounds;
      break;
    }
    ++round;
    auto [rec, next] = sbl_round(current, params, cfg, round);
    result.retries_total += rec.retries;
    blue = set_union(blue, rec.blue);
    const bool inner_ok = rec.bl_status == SolverStatus::Ok;
    result.rounds.push_back(std::move(rec));
    if (!inner_ok) {
      result.status = SolverStatus::RoundLimitExceeded;
      result.mis = std::move(blue);
      return result;
    }
    if (cfg.check_invariants && !is_independent(input, blue)) {
      throw Error(Errc::InternalInvariant, "blue set lost independence in round " + std::to_string(round));
    }
    current = std::move(next);
  }
  if (result.loop_exit == LoopExit::NotEntered && round > 0) result.loop_exit = LoopExit::StopThreshold;

  result.mis = set_union(blue, greedy_mis(current, VertexOrder::ascending(current)));
  result.fallback = FinalPhase::GreedyRan;
  return result;
}

std::string_view to_string(FailPolicy p) { return p == FailPolicy::Abort ? "abort" : "fallback-greedy"; }

std::string_view to_string(LoopExit e) {
  switch (e) {
    case LoopExit::NotEntered: return "not-entered";
    case LoopExit::StopThreshold: return "stop-threshold";
    case LoopExit::MaxRounds: return "max-rounds";
  }
  return "unknown";
}

std::string_view to_string(FinalPhase f) { return f == FinalPhase::GreedyRan ? "greedy-ran" : "bl-direct-ran"; }

std::string_view to_string(SolverStatus s) { return s == SolverStatus::Ok ? "ok" : "round-limit-exceeded"; }

}  // namespace hmis

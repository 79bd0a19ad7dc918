#include "hmis/bl.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hmis/degree.hpp"
#include "hmis/error.hpp"
#include "hmis/parallel.hpp"

namespace hmis {

namespace {

std::vector<char> flags_of(std::size_t n, const VertexSet& s) {
  std::vector<char> in(n + 1, 0);
  for (Vertex v : s) in[v] = 1;
  return in;
}

}  // namespace

double bl_probability(std::size_t dim, double delta) {
  return 1.0 / (std::ldexp(1.0, static_cast<int>(dim) + 1) * delta);
}

std::size_t default_bl_max_rounds(std::size_t n) {
  const auto lg = static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(std::max<std::size_t>(n, 1)))));
  return 200 * (1 + lg) * (1 + lg) * (1 + lg);
}

VertexSet draw_marks(const Hypergraph& h, double p, const CounterStream& stream, std::size_t threads) {
  const auto& vs = h.vertices();
  std::vector<char> hit(vs.size(), 0);
  parallel_for(vs.size(), vs.size() < 4096 ? 1 : threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) hit[i] = stream.bernoulli(vs[i], p) ? 1 : 0;
  });
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (hit[i]) out.push_back(vs[i]);
  }
  return VertexSet::from_sorted(std::move(out));
}

BlStep bl_step(const Hypergraph& h, const VertexSet& marked) {
  const auto is_marked = flags_of(h.universe(), marked);
  std::vector<char> unmark(h.universe() + 1, 0);
  for (const auto& e : h.edges()) {
    if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return is_marked[v] != 0; })) {
      for (Vertex v : e) unmark[v] = 1;
    }
  }
  std::vector<Vertex> added_ids;
  std::vector<Vertex> unmarked_ids;
  for (Vertex v : marked) {
    (unmark[v] ? unmarked_ids : added_ids).push_back(v);
  }
  BlStep step;
  step.added = VertexSet::from_sorted(std::move(added_ids));
  step.unmarked = VertexSet::from_sorted(std::move(unmarked_ids));

  const auto is_added = flags_of(h.universe(), step.added);
  std::vector<VertexSet> shrunk;
  shrunk.reserve(h.num_edges());
  for (const auto& e : h.edges()) {
    std::vector<Vertex> rest;
    rest.reserve(e.size());
    for (Vertex v : e) {
      if (!is_added[v]) rest.push_back(v);
    }
    if (rest.empty()) throw Error(Errc::InternalInvariant, "an edge became fully added");
    shrunk.push_back(VertexSet::from_sorted(std::move(rest)));
  }
  Hypergraph cleaned = normalize(Hypergraph(h.universe(), set_difference(h.vertices(), step.added), std::move(shrunk)));

  // After superset removal no other edge contains a singleton's vertex.
  std::vector<Vertex> singles;
  std::vector<VertexSet> kept;
  for (const auto& e : cleaned.edges()) {
    if (e.size() == 1) {
      singles.push_back(e.front());
    } else {
      kept.push_back(e);
    }
  }
  step.excluded = VertexSet::from_unsorted(std::move(singles));
  step.next = Hypergraph(h.universe(), set_difference(cleaned.vertices(), step.excluded), std::move(kept));
  return step;
}

BlStep bl_prepare(const Hypergraph& h) { return bl_step(h, VertexSet{}); }

BlRoundOutcome bl_round(const Hypergraph& h, double p, const CounterStream& stream, std::size_t threads) {
  BlRoundRecord rec;
  rec.p_used = p;
  rec.marked = draw_marks(h, p, stream, threads);
  BlStep step = bl_step(h, rec.marked);
  rec.unmarked = std::move(step.unmarked);
  rec.added = std::move(step.added);
  rec.excluded = std::move(step.excluded);
  rec.remaining_vertices = step.next.num_vertices();
  rec.remaining_edges = step.next.num_edges();
  return {std::move(rec), std::move(step.next)};
}

BlResult run_bl(const Hypergraph& h, const BlConfig& cfg) {
  if (cfg.p_override && !(*cfg.p_override > 0.0 && *cfg.p_override <= 1.0)) {
    throw Error(Errc::Precondition, "p_override must lie in (0, 1]");
  }
  const std::size_t max_rounds = cfg.max_rounds.value_or(default_bl_max_rounds(h.num_vertices()));
  if (max_rounds < 1) throw Error(Errc::Precondition, "max_rounds must be at least 1");

  BlResult result;
  Hypergraph current = bl_prepare(h).next;
  const CounterStream base(cfg.seed);
  std::optional<double> fixed_p;
  VertexSet mis;

  for (std::size_t round = 1; current.num_vertices() > 0; ++round) {
    if (round > max_rounds) {
      result.status = SolverStatus::RoundLimitExceeded;
      break;
    }
    if (current.num_edges() == 0) {
      BlRoundRecord rec;
      rec.round = round;
      // Nothing can block the remaining vertices.
      rec.marked = current.vertices();
      rec.added = current.vertices();
      rec.p_used = 1.0;
      mis = set_union(mis, rec.added);
      result.rounds.push_back(std::move(rec));
      break;
    }
    const DegreeProfile prof = degree_profile(current);
    double p = 0.0;
    if (cfg.p_override) {
      p = *cfg.p_override;
    } else if (cfg.p_mode == PMode::Fixed) {
      if (!fixed_p) fixed_p = bl_probability(prof.dim, prof.delta);
      p = *fixed_p;
    } else {
      p = bl_probability(prof.dim, prof.delta);
    }
    auto [rec, next] = bl_round(current, p, base.derive(round), cfg.threads);
    rec.round = round;
    rec.delta = prof.delta;
    mis = set_union(mis, rec.added);
    current = std::move(next);
    result.rounds.push_back(std::move(rec));
  }
  result.mis = std::move(mis);
  return result;
}

}  // namespace hmis

#include "hmis/hypergraph.hpp"

#include <algorithm>
#include <string>

#include "hmis/error.hpp"

namespace hmis {

namespace {

std::vector<char> membership(std::size_t n, const VertexSet& s) {
  std::vector<char> in(n + 1, 0);
  for (Vertex v : s) {
    if (v == 0 || v > n) {
      throw Error(Errc::Precondition, "vertex " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
    }
    in[v] = 1;
  }
  return in;
}

bool fully_inside(const VertexSet& e, const std::vector<char>& in) {
  return std::all_of(e.begin(), e.end(), [&](Vertex v) { return in[v] != 0; });
}

}  // namespace

Hypergraph::Hypergraph(std::size_t n, std::vector<VertexSet> edges)
    : Hypergraph(n, VertexSet::range(1, static_cast<Vertex>(n)), std::move(edges)) {}

Hypergraph::Hypergraph(std::size_t n, VertexSet vertices, std::vector<VertexSet> edges)
    : n_(n), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (!vertices_.empty() && (vertices_.front() == 0 || vertices_.back() > n_)) {
    throw Error(Errc::Precondition, "vertex set exceeds universe [1, " + std::to_string(n_) + "]");
  }
  auto active = membership(n_, vertices_);
  for (const auto& e : edges_) {
    if (e.empty()) throw Error(Errc::EmptyEdge, "hypergraph contains an empty edge");
    for (Vertex v : e) {
      if (v == 0 || v > n_ || !active[v]) {
        throw Error(Errc::Precondition, "edge vertex " + std::to_string(v) + " is not an active vertex");
      }
    }
  }
}

std::size_t Hypergraph::dimension() const noexcept {
  std::size_t d = 0;
  for (const auto& e : edges_) d = std::max(d, e.size());
  return d;
}

Incidence::Incidence(const Hypergraph& h) : by_vertex_(h.universe() + 1) {
  for (std::uint32_t i = 0; i < h.edges().size(); ++i) {
    for (Vertex v : h.edges()[i]) by_vertex_[v].push_back(i);
  }
}

Hypergraph normalize(const Hypergraph& h) {
  std::vector<VertexSet> edges = h.edges();
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  // A subset f of e has its minimum vertex inside e, so bucketing edges by
  // minimum vertex bounds the candidates to check.
  std::vector<std::vector<std::uint32_t>> by_min(h.universe() + 1);
  for (std::uint32_t i = 0; i < edges.size(); ++i) by_min[edges[i].front()].push_back(i);

  std::vector<VertexSet> kept;
  kept.reserve(edges.size());
  for (const auto& e : edges) {
    bool dominated = false;
    for (Vertex v : e) {
      for (std::uint32_t fi : by_min[v]) {
        const auto& f = edges[fi];
        if (f.size() < e.size() && f.is_subset_of(e)) {
          dominated = true;
          break;
        }
      }
      if (dominated) break;
    }
    if (!dominated) kept.push_back(e);
  }
  return Hypergraph(h.universe(), h.vertices(), std::move(kept));
}

Hypergraph induce(const Hypergraph& h, const VertexSet& vs) {
  auto in = membership(h.universe(), vs);
  std::vector<VertexSet> edges;
  for (const auto& e : h.edges()) {
    if (fully_inside(e, in)) edges.push_back(e);
  }
  return Hypergraph(h.universe(), set_intersection(h.vertices(), vs), std::move(edges));
}

bool is_independent(const Hypergraph& h, const VertexSet& s) {
  auto in = membership(h.universe(), s);
  return std::none_of(h.edges().begin(), h.edges().end(), [&](const VertexSet& e) { return fully_inside(e, in); });
}

bool is_maximal_independent(const Hypergraph& h, const VertexSet& s) {
  auto in = membership(h.universe(), s);
  for (const auto& e : h.edges()) {
    if (fully_inside(e, in)) return false;
  }
  // v is blocked iff some edge through v has every other vertex in s.
  const Incidence inc(h);
  for (Vertex v : h.vertices()) {
    if (in[v]) continue;
    bool blocked = false;
    for (std::uint32_t ei : inc.edges_of(v)) {
      const auto& e = h.edges()[ei];
      if (std::all_of(e.begin(), e.end(), [&](Vertex u) { return u == v || in[u] != 0; })) {
        blocked = true;
        break;
      }
    }
    if (!blocked) return false;
  }
  return true;
}

}  // namespace hmis

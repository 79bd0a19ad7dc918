#pragma once

#include <cstddef>
#include <vector>

#include "hmis/vertex_set.hpp"

namespace hmis {

/// A hypergraph over the id universe [1, n].
///
/// The active vertex set may be a proper subset of the universe (induced and
/// residual hypergraphs keep the original ids). Every edge is non-empty and
/// lies inside the active vertex set.
class Hypergraph {
 public:
  Hypergraph() = default;
  /// Active vertex set is the whole universe {1..n}.
  Hypergraph(std::size_t n, std::vector<VertexSet> edges);
  Hypergraph(std::size_t n, VertexSet vertices, std::vector<VertexSet> edges);

  std::size_t universe() const noexcept { return n_; }
  const VertexSet& vertices() const noexcept { return vertices_; }
  const std::vector<VertexSet>& edges() const noexcept { return edges_; }
  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  /// Maximum edge size; 0 for an edge-free hypergraph.
  std::size_t dimension() const noexcept;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::size_t n_ = 0;
  VertexSet vertices_;
  std::vector<VertexSet> edges_;
};

/// Per-vertex list of incident edge indices, indexed by vertex id.
class Incidence {
 public:
  explicit Incidence(const Hypergraph& h);
  const std::vector<std::uint32_t>& edges_of(Vertex v) const { return by_vertex_[v]; }

 private:
  std::vector<std::vector<std::uint32_t>> by_vertex_;
};

/// Collapses duplicate edges and drops every edge that strictly contains
/// another. Edges come back in lexicographic order.
Hypergraph normalize(const Hypergraph& h);

/// Keeps only the edges fully inside `vs`; ids are not renumbered.
Hypergraph induce(const Hypergraph& h, const VertexSet& vs);

bool is_independent(const Hypergraph& h, const VertexSet& s);
bool is_maximal_independent(const Hypergraph& h, const VertexSet& s);

}  // namespace hmis

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "hmis/hypergraph.hpp"

namespace hmis {

/// |N_j(x,H)|^(1/j) kept as the exact pair (count, j).
///
/// Ordering compares count_a^(j_b) against count_b^(j_a) exactly, so ties
/// such as 8^(1/3) vs 2^(1/1) never depend on floating-point rounding.
struct NormalizedDegree {
  std::uint64_t count = 0;
  std::uint32_t arity = 1;

  /// The real value; perfect powers come back exact.
  double value() const;

  friend std::strong_ordering operator<=>(const NormalizedDegree& a, const NormalizedDegree& b);
  friend bool operator==(const NormalizedDegree& a, const NormalizedDegree& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }
};

struct DegreeProfile {
  std::size_t dim = 0;
  /// Δ_i for 2 <= i <= dim; zero where no edge of size i exists.
  std::map<std::size_t, double> delta_i;
  std::map<std::size_t, NormalizedDegree> delta_i_exact;
  double delta = 0.0;
};

/// N_j(x,H): every y of size j, disjoint from x, with x ∪ y an edge.
std::vector<VertexSet> neighborhood(const Hypergraph& h, const VertexSet& x, std::size_t j);

/// Δ_i(H) and Δ(H), enumerating subsets of edges only. Throws NoEdges when
/// no edge of size >= 2 exists.
DegreeProfile degree_profile(const Hypergraph& h);

/// Number of subset evaluations degree_profile would perform (sum of 2^|e|),
/// saturating at UINT64_MAX.
std::uint64_t degree_work(const Hypergraph& h);

}  // namespace hmis

#pragma once

#include <cstdint>
#include <vector>

#include "hmis/hypergraph.hpp"

namespace hmis {

/// A permutation of a hypergraph's active vertices.
class VertexOrder {
 public:
  /// Validates that `order` is a permutation of h.vertices().
  VertexOrder(const Hypergraph& h, std::vector<Vertex> order);

  static VertexOrder ascending(const Hypergraph& h);
  /// Fisher-Yates driven by a counter stream keyed on `seed`.
  static VertexOrder shuffled(const Hypergraph& h, std::uint64_t seed);

  const std::vector<Vertex>& ids() const noexcept { return order_; }

 private:
  explicit VertexOrder(std::vector<Vertex> order) : order_(std::move(order)) {}
  std::vector<Vertex> order_;
};

/// Scans `order` and keeps v whenever S ∪ {v} stays independent. Linear in
/// the total edge size; the result is always maximal.
VertexSet greedy_mis(const Hypergraph& h, const VertexOrder& order);

/// Largest active vertex count enumerate_all_mis accepts.
inline constexpr std::size_t kEnumerationLimit = 20;

/// Every maximal independent set, sorted lexicographically. Throws TooLarge
/// above kEnumerationLimit active vertices.
std::vector<VertexSet> enumerate_all_mis(const Hypergraph& h);

}  // namespace hmis

#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace hmis {

/// Vertex ids are dense and 1-based.
using Vertex = std::uint32_t;

/// A sorted, duplicate-free set of vertex ids.
///
/// Used for edges, samples, colorings and independent sets alike. The
/// sortedness invariant is established on construction, so every set
/// operation below is a linear merge.
class VertexSet {
 public:
  using const_iterator = std::vector<Vertex>::const_iterator;

  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids);

  /// Sorts and deduplicates.
  static VertexSet from_unsorted(std::vector<Vertex> ids);
  /// Trusts the caller: ids must already be strictly increasing.
  static VertexSet from_sorted(std::vector<Vertex> ids);
  /// {first, ..., last}; empty if last < first.
  static VertexSet range(Vertex first, Vertex last);

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  const_iterator begin() const noexcept { return ids_.begin(); }
  const_iterator end() const noexcept { return ids_.end(); }
  Vertex operator[](std::size_t i) const { return ids_[i]; }
  Vertex front() const { return ids_.front(); }
  Vertex back() const { return ids_.back(); }
  std::span<const Vertex> ids() const noexcept { return ids_; }

  bool contains(Vertex v) const;
  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.ids_ <=> b.ids_; }

 private:
  std::vector<Vertex> ids_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet with_vertex(const VertexSet& a, Vertex v);

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept;
};

}  // namespace hmis

#include "hmis/vertex_set.hpp"

#include <algorithm>
#include <iterator>

namespace hmis {

VertexSet::VertexSet(std::initializer_list<Vertex> ids) : ids_(ids) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::from_unsorted(std::vector<Vertex> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return from_sorted(std::move(ids));
}

VertexSet VertexSet::from_sorted(std::vector<Vertex> ids) {
  VertexSet s;
  s.ids_ = std::move(ids);
  return s;
}

VertexSet VertexSet::range(Vertex first, Vertex last) {
  VertexSet s;
  if (last >= first) {
    s.ids_.reserve(last - first + 1);
    for (Vertex v = first; v <= last; ++v) s.ids_.push_back(v);
  }
  return s;
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

bool VertexSet::intersects(const VertexSet& other) const {
  auto a = ids_.begin();
  auto b = other.ids_.begin();
  while (a != ids_.end() && b != other.ids_.end()) {
    if (*a == *b) return true;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return false;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet::from_sorted(std::move(out));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  out.reserve(a.size());
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet::from_sorted(std::move(out));
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet::from_sorted(std::move(out));
}

VertexSet with_vertex(const VertexSet& a, Vertex v) {
  std::vector<Vertex> out(a.begin(), a.end());
  out.insert(std::upper_bound(out.begin(), out.end(), v), v);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return VertexSet::from_sorted(std::move(out));
}

std::size_t VertexSetHash::operator()(const VertexSet& s) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ s.size();
  for (Vertex v : s) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace hmis

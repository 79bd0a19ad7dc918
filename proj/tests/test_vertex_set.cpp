#include <doctest.h>

#include <unordered_set>

#include "hmis/vertex_set.hpp"

using hmis::VertexSet;

TEST_CASE("construction sorts and deduplicates") {
  const VertexSet s{5, 1, 3, 1};
  CHECK(s.size() == 3);
  CHECK(s[0] == 1);
  CHECK(s[2] == 5);
  CHECK(VertexSet::from_unsorted({4, 4, 2}) == VertexSet{2, 4});
  CHECK(VertexSet::range(3, 6) == VertexSet{3, 4, 5, 6});
  CHECK(VertexSet::range(4, 3).empty());
}

TEST_CASE("membership and containment") {
  const VertexSet a{1, 3, 5};
  CHECK(a.contains(3));
  CHECK_FALSE(a.contains(4));
  CHECK(VertexSet{1, 5}.is_subset_of(a));
  CHECK_FALSE(VertexSet{1, 2}.is_subset_of(a));
  CHECK(VertexSet{}.is_subset_of(a));
  CHECK(a.intersects(VertexSet{5, 6}));
  CHECK_FALSE(a.intersects(VertexSet{2, 4}));
}

TEST_CASE("set algebra") {
  const VertexSet a{1, 2, 3};
  const VertexSet b{3, 4};
  CHECK(hmis::set_union(a, b) == VertexSet{1, 2, 3, 4});
  CHECK(hmis::set_difference(a, b) == VertexSet{1, 2});
  CHECK(hmis::set_intersection(a, b) == VertexSet{3});
  CHECK(hmis::with_vertex(b, 1) == VertexSet{1, 3, 4});
  CHECK(hmis::with_vertex(b, 3) == b);
}

TEST_CASE("ordering is lexicographic on ids") {
  CHECK(VertexSet{1, 2} < VertexSet{1, 3});
  CHECK(VertexSet{1, 2} < VertexSet{1, 2, 3});
  CHECK(VertexSet{2} > VertexSet{1, 9});
}

TEST_CASE("hash supports unordered containers") {
  std::unordered_set<VertexSet, hmis::VertexSetHash> seen;
  seen.insert({1, 2});
  seen.insert({2, 1});
  seen.insert({1, 3});
  CHECK(seen.size() == 2);
}

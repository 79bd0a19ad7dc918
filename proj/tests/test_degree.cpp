#include <cmath>
#include <random>

#include "hmis/degree.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using hmis::Errc;
using hmis::Hypergraph;
using hmis::NormalizedDegree;
using hmis::VertexSet;

TEST_CASE("neighborhood examples") {
  const Hypergraph h0 = testutil::h0();
  CHECK(hmis::neighborhood(h0, {3}, 1) == std::vector<VertexSet>{{4}});
  CHECK(hmis::neighborhood(h0, {3}, 2) == std::vector<VertexSet>{{1, 2}});
  CHECK(hmis::neighborhood(h0, {5}, 2).empty());
  CHECK(hmis::neighborhood(h0, {4}, 1) == std::vector<VertexSet>{{3}, {5}});
}

TEST_CASE("neighborhood arity errors") {
  const Hypergraph h0 = testutil::h0();
  CHECK_ERRC(hmis::neighborhood(h0, {3}, 0), Errc::BadArity);
  CHECK_ERRC(hmis::neighborhood(h0, {3}, 3), Errc::BadArity);
  CHECK_ERRC(hmis::neighborhood(h0, {1, 2}, 2), Errc::BadArity);
  CHECK_ERRC(hmis::neighborhood(h0, {}, 1), Errc::Precondition);
}

TEST_CASE("neighborhood matches brute force") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 100; ++it) {
    const std::size_t n = 3 + rng() % 8;
    const Hypergraph h = hmis::normalize(oracle::random_hypergraph(rng, n, 1 + rng() % 12, 2, 5));
    const auto d = h.dimension();
    const VertexSet x{static_cast<hmis::Vertex>(1 + rng() % n)};
    for (std::size_t j = 1; j + 1 <= d; ++j) {
      std::set<oracle::Mask> got;
      for (const auto& y : hmis::neighborhood(h, x, j)) {
        CHECK(y.size() == j);
        CHECK_FALSE(y.intersects(x));
        got.insert(oracle::to_mask(y));
      }
      CHECK(got == oracle::neighborhood(h, x, j));
    }
  }
}

TEST_CASE("normalized degree compares exactly") {
  CHECK(NormalizedDegree{8, 3} == NormalizedDegree{2, 1});
  CHECK(NormalizedDegree{9, 2} == NormalizedDegree{3, 1});
  CHECK(NormalizedDegree{27, 3} < NormalizedDegree{4, 1});
  CHECK(NormalizedDegree{5, 2} > NormalizedDegree{2, 1});
  CHECK(NormalizedDegree{0, 1} < NormalizedDegree{1, 5});
  CHECK(NormalizedDegree{8, 3}.value() == 2.0);
  CHECK(NormalizedDegree{1000000, 2}.value() == 1000.0);
  CHECK(NormalizedDegree{2, 2}.value() == doctest::Approx(std::sqrt(2.0)));
  // 2^60 vs (2^30)^2: equal, far past exact double roots.
  CHECK(NormalizedDegree{std::uint64_t{1} << 60, 2} == NormalizedDegree{std::uint64_t{1} << 30, 1});
  CHECK(NormalizedDegree{(std::uint64_t{1} << 60) + 1, 2} > NormalizedDegree{std::uint64_t{1} << 30, 1});
}

TEST_CASE("degree profile examples") {
  const auto p0 = hmis::degree_profile(testutil::h0());
  CHECK(p0.dim == 3);
  CHECK(p0.delta_i.at(2) == 2.0);
  CHECK(p0.delta_i.at(3) == 1.0);
  CHECK(p0.delta == 2.0);

  // No edge has size 2, so every N_1(x) is empty and delta_2 is 0.
  const auto p1 = hmis::degree_profile(Hypergraph(3, {{1, 2, 3}}));
  CHECK(p1.delta_i.at(2) == 0.0);
  CHECK(p1.delta_i.at(3) == 1.0);
  CHECK(p1.delta == 1.0);

  const auto p2 = hmis::degree_profile(Hypergraph(2, {{1, 2}}));
  CHECK(p2.delta_i.at(2) == 1.0);
  CHECK(p2.delta == 1.0);
}

TEST_CASE("degree profile errors") {
  CHECK_ERRC(hmis::degree_profile(Hypergraph(3, {})), Errc::NoEdges);
  CHECK_ERRC(hmis::degree_profile(Hypergraph(3, {{1}, {2}})), Errc::NoEdges);
}

TEST_CASE("degree profile matches brute force over all subsets") {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 300; ++it) {
    const std::size_t n = 2 + rng() % 11;
    const Hypergraph h = hmis::normalize(oracle::random_hypergraph(rng, n, 1 + rng() % 20, 2, 6));
    const auto prof = hmis::degree_profile(h);
    const auto truth = oracle::delta_i(h);
    double best = 0.0;
    for (const auto& [i, v] : truth) {
      CHECK(prof.delta_i.at(i) == doctest::Approx(v).epsilon(1e-12));
      best = std::max(best, v);
    }
    CHECK(prof.delta == doctest::Approx(best).epsilon(1e-12));
    CHECK(prof.delta >= 1.0);
  }
}

TEST_CASE("degree work counts edge subsets") {
  CHECK(hmis::degree_work(testutil::h0()) == 8 + 4 + 4);
}

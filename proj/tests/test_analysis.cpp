#include <cmath>
#include <numbers>
#include <random>

#include "hmis/analysis.hpp"
#include "hmis/degree.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using hmis::Errc;
using hmis::Hypergraph;
using hmis::RecurrenceVariant;
using hmis::VertexSet;
using hmis::WeightedHypergraph;

namespace {

WeightedHypergraph single_pair() { return WeightedHypergraph::unit(Hypergraph(2, {{1, 2}})); }

}  // namespace

TEST_CASE("weighted hypergraph validation") {
  CHECK_ERRC(WeightedHypergraph(Hypergraph(2, {{1, 2}}), {}), Errc::Precondition);
  CHECK_ERRC(WeightedHypergraph(Hypergraph(2, {{1, 2}}), {0.0}), Errc::Precondition);
  CHECK_ERRC(WeightedHypergraph(Hypergraph(2, {{1, 2}}), {-1.0}), Errc::Precondition);
  CHECK(WeightedHypergraph(Hypergraph(3, {{1, 2}, {2, 3}}), {2.0, 5.0}).total_weight() == 7.0);
}

TEST_CASE("eval_S examples") {
  CHECK(hmis::eval_S(single_pair(), {1, 2}) == 1.0);
  CHECK(hmis::eval_S(single_pair(), {1}) == 0.0);
  const WeightedHypergraph wh(Hypergraph(3, {{1, 2}, {2, 3}}), {2.0, 5.0});
  CHECK(hmis::eval_S(wh, {1, 2, 3}) == 7.0);
}

TEST_CASE("eval_P examples") {
  CHECK(hmis::eval_P(single_pair(), 0.5, {}) == 0.25);
  CHECK(hmis::eval_P(single_pair(), 0.5, {1}) == 0.5);
  CHECK(hmis::eval_P(single_pair(), 0.5, {1, 2}) == 1.0);
  CHECK(hmis::eval_P(single_pair(), 0.5, {3}) == 0.0);
}

TEST_CASE("eval_D examples") {
  CHECK(hmis::eval_D(single_pair(), 0.5) == 1.0);
  CHECK(hmis::eval_D(WeightedHypergraph::unit(Hypergraph(4, {{1, 2}, {3, 4}})), 1.0) == 2.0);
  const WeightedHypergraph wh(Hypergraph(4, {{1, 2}, {2, 3, 4}}), {1.5, 0.25});
  const WeightedHypergraph scaled(wh.base(), {4.5, 0.75});
  CHECK(hmis::eval_D(scaled, 0.3) == doctest::Approx(3.0 * hmis::eval_D(wh, 0.3)).epsilon(1e-15));
}

TEST_CASE("eval_P at the empty set is the exact expectation of S") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> weight(0.1, 10.0);
  std::uniform_real_distribution<double> prob(0.05, 0.95);
  for (int it = 0; it < 60; ++it) {
    const std::size_t n = 2 + rng() % 11;
    const Hypergraph base = oracle::random_hypergraph(rng, n, 1 + rng() % 12, 1, 5);
    std::vector<double> w(base.num_edges());
    for (auto& x : w) x = weight(rng);
    const WeightedHypergraph wh(base, w);
    const double p = prob(rng);
    const double exact = oracle::expected_S(wh, p);
    CHECK(hmis::eval_P(wh, p, {}) == doctest::Approx(exact).epsilon(1e-12));
    CHECK(hmis::eval_D(wh, p) >= hmis::eval_P(wh, p, {}));
  }
}

TEST_CASE("eval_D is the maximum of eval_P over all subsets") {
  std::mt19937_64 rng(62);
  for (int it = 0; it < 40; ++it) {
    const std::size_t n = 2 + rng() % 9;
    const WeightedHypergraph wh = WeightedHypergraph::unit(oracle::random_hypergraph(rng, n, 1 + rng() % 8, 1, 4));
    double best = 0.0;
    for (oracle::Mask x = 0; x < (oracle::Mask{1} << n); ++x) best = std::max(best, hmis::eval_P(wh, 0.4, oracle::from_mask(x)));
    CHECK(hmis::eval_D(wh, 0.4) == doctest::Approx(best).epsilon(1e-12));
  }
}

TEST_CASE("recurrence tables") {
  const auto mod = hmis::recurrence(3, RecurrenceVariant::ModifiedD2);
  CHECK(mod.f.at(2) == 9);
  CHECK(mod.f.at(3) == 27);
  CHECK(mod.F.at(1) == 0);
  CHECK(mod.F.at(2) == 9);
  CHECK(mod.F.at(3) == 36);

  const auto orig = hmis::recurrence(4, RecurrenceVariant::KelsenOriginal);
  CHECK(orig.f.at(2) == 7);
  CHECK(orig.F.at(2) == 7);
  CHECK(orig.F.at(3) == 28);
  CHECK(orig.F.at(4) == 119);
  // f(i) = (i-1) * sum_{j<i} f(j) + 7
  CHECK(orig.f.at(4) == 3 * (7 + 21) + 7);

  CHECK_ERRC(hmis::recurrence(1, RecurrenceVariant::ModifiedD2), Errc::Precondition);
  CHECK_ERRC(hmis::recurrence(40, RecurrenceVariant::ModifiedD2), Errc::Precondition);
}

TEST_CASE("potential report on H0") {
  const auto r = hmis::potential_report(testutil::h0(), RecurrenceVariant::ModifiedD2);
  CHECK(r.d == 3);
  CHECK(r.log2_v.at(3) == 0.0);
  const double lg5 = std::log2(5.0);
  const double v2 = std::pow(lg5, 9.0);  // (log2 5)^f(2) * v_3 with v_3 = 1
  CHECK(r.v.at(2) == doctest::Approx(v2).epsilon(1e-9));
  CHECK(r.v.at(2) == doctest::Approx(1962.0).epsilon(1e-3));
  CHECK(r.log2_T.at(2) == r.log2_v.at(2));
  CHECK(r.log2_T.at(3) == doctest::Approx(r.log2_v.at(2) - 9.0 * std::log2(lg5)).epsilon(1e-12));
  // q_j = 2^(d(d+1)) * log log n * (log n)^(F(j-1)(j-1)+2)
  CHECK(r.log2_q.at(2) == doctest::Approx(12.0 + std::log2(std::log2(lg5)) + 2.0 * std::log2(lg5)).epsilon(1e-12));
  CHECK(r.log2_q.at(3) == doctest::Approx(12.0 + std::log2(std::log2(lg5)) + 20.0 * std::log2(lg5)).epsilon(1e-12));
  CHECK(r.migration_exponent.at(2) == 4 + 0 - 9 + 2);
}

TEST_CASE("lambda at n = 2^16") {
  const auto r = hmis::potential_report(Hypergraph(1 << 16, {{1, 2}, {2, 3}}), RecurrenceVariant::ModifiedD2);
  CHECK(r.lambda_n == 0.5);
  CHECK(r.log2_T.at(2) == r.log2_v.at(2));
}

TEST_CASE("potential report invariants on random instances") {
  std::mt19937_64 rng(63);
  for (int it = 0; it < 60; ++it) {
    const std::size_t n = 3 + rng() % 10;
    const Hypergraph h = hmis::normalize(oracle::random_hypergraph(rng, n, 1 + rng() % 12, 2, 5));
    for (auto variant : {RecurrenceVariant::KelsenOriginal, RecurrenceVariant::ModifiedD2}) {
      const auto r = hmis::potential_report(h, variant);
      const double lglg = std::log2(std::log2(static_cast<double>(n)));
      for (std::size_t i = 2; i < r.d; ++i) {
        const double lifted = static_cast<double>(r.rec.f.at(i)) * lglg + r.log2_v.at(i + 1);
        const double own = std::log2(r.delta_i.at(i));
        CHECK(r.log2_v.at(i) >= own);
        CHECK(r.log2_v.at(i) >= lifted - 1e-12);
        CHECK((r.log2_v.at(i) == own || r.log2_v.at(i) == lifted));
      }
      for (std::size_t i = 2; i < r.d; ++i) CHECK(r.rec.F.at(i + 1) >= r.rec.F.at(i));
      CHECK(r.log2_T.at(2) == r.log2_v.at(2));
    }
  }
}

TEST_CASE("potential report preconditions") {
  CHECK_ERRC(hmis::potential_report(Hypergraph(3, {}), RecurrenceVariant::ModifiedD2), Errc::NoEdges);
  CHECK_ERRC(hmis::potential_report(Hypergraph(2, {{1, 2}}), RecurrenceVariant::ModifiedD2), Errc::Precondition);
}

TEST_CASE("F inequality table") {
  for (std::size_t d = 3; d <= 8; ++d) {
    const auto rows = hmis::f_inequality_check(d, RecurrenceVariant::ModifiedD2);
    CHECK(rows.size() == d - 1);
    for (const auto& row : rows) {
      CHECK(row.holds);
      CHECK(row.F_j - row.required == static_cast<std::int64_t>(d * d) - 5);
    }
    for (const auto& row : hmis::f_inequality_check(d, RecurrenceVariant::KelsenOriginal)) {
      CHECK(row.F_j - row.required == 2);
    }
  }
}

TEST_CASE("bound constants") {
  const Hypergraph h0 = testutil::h0();
  const auto c = hmis::kelsen_constants(h0, 0.1, 2.0);
  const double lg5 = std::log2(5.0);
  CHECK(c.log2_k_H == doctest::Approx(7.0 * std::log2(lg5 + 2.0) + 4.0).epsilon(1e-9));
  CHECK(c.log2_k_H == doctest::Approx(18.78).epsilon(1e-3));
  // (2^3 * ceil(log2 5) * 3)^2 * log2 5 * (4e)^(1/4)
  const double p_h = std::pow(8.0 * 3.0 * 3.0, 2.0) * lg5 * std::pow(4.0 * std::numbers::e, 0.25);
  CHECK(c.log2_p_H == doctest::Approx(std::log2(p_h)).epsilon(1e-9));
  CHECK(c.log2_corollary_factor == doctest::Approx(16.0 * std::log2(lg5)).epsilon(1e-12));
  CHECK(c.kimvu_a.at(1) == 8.0);
  CHECK(c.kimvu_a.at(2) == doctest::Approx(64.0 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK(c.kimvu_a.at(3) == doctest::Approx(512.0 * std::sqrt(6.0)).epsilon(1e-12));
  CHECK(c.increase_exponent_kelsen.at(2) == 8);
  CHECK(c.increase_exponent_kimvu.at(2) == 4);

  const auto dflt = hmis::kelsen_constants(h0, 0.1);
  CHECK(dflt.delta_param == doctest::Approx(lg5 * lg5).epsilon(1e-15));

  CHECK(std::isinf(hmis::kelsen_constants(h0, 0.1, 1.0).log2_p_H));
  // The delta -> 1+ limit is finite: (4e/x)^(x/4) -> 1.
  const double near = hmis::kelsen_constants(h0, 0.1, 1.0 + 1e-12).log2_p_H;
  CHECK(std::isfinite(near));
  CHECK(near == doctest::Approx(2.0 * std::log2(72.0) + std::log2(lg5)).epsilon(1e-9));

  CHECK_ERRC(hmis::kelsen_constants(Hypergraph(2, {{1, 2}}), 0.1), Errc::Precondition);
  CHECK_ERRC(hmis::kelsen_constants(Hypergraph(4, {}), 0.1), Errc::NoEdges);
}

TEST_CASE("migration hypergraph example") {
  const Hypergraph h(4, {{1, 2, 3}, {1, 2, 4}});
  const auto wh = hmis::migration_hypergraph(h, {1}, 1, 2);
  CHECK(wh.base().edges() == std::vector<VertexSet>{{2}, {3}, {4}});
  CHECK(wh.weights() == std::vector<double>{2.0, 1.0, 1.0});
  CHECK(wh.base().vertices() == h.vertices());
}

TEST_CASE("migration hypergraph edge cases") {
  const Hypergraph h(5, {{1, 2, 3}, {1, 2, 4}});
  CHECK(hmis::migration_hypergraph(h, {5}, 1, 2).base().num_edges() == 0);
  CHECK_ERRC(hmis::migration_hypergraph(h, {1}, 0, 2), Errc::BadArity);
  CHECK_ERRC(hmis::migration_hypergraph(h, {1}, 2, 2), Errc::BadArity);
  CHECK_ERRC(hmis::migration_hypergraph(h, {1}, 1, 3), Errc::BadArity);
  CHECK_ERRC(hmis::migration_hypergraph(h, {}, 1, 2), Errc::Precondition);
  // Smallest legal j: Y ranges over (k-1)-subsets of N_k members.
  const Hypergraph h4(5, {{1, 2, 3, 4}, {1, 3, 4, 5}});
  const auto wh = hmis::migration_hypergraph(h4, {1}, 1, 3);
  CHECK(wh.base().edges() ==
        std::vector<VertexSet>{{2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}});
  CHECK(wh.weights() == std::vector<double>{1.0, 1.0, 2.0, 1.0, 1.0});
}

TEST_CASE("migration weights match independent recomputation") {
  std::mt19937_64 rng(64);
  for (int it = 0; it < 80; ++it) {
    const std::size_t n = 4 + rng() % 9;
    const Hypergraph h = hmis::normalize(oracle::random_hypergraph(rng, n, 2 + rng() % 12, 2, 5));
    const std::size_t d = h.dimension();
    if (d < 3) continue;
    const VertexSet x{static_cast<hmis::Vertex>(1 + rng() % n)};
    for (std::size_t k = 2; k + 1 <= d; ++k) {
      for (std::size_t j = 1; j < k; ++j) {
        const auto wh = hmis::migration_hypergraph(h, x, j, k);
        // Expected edge set: (k-j)-subsets of N_k(x) members.
        std::set<oracle::Mask> expected;
        for (oracle::Mask z : oracle::neighborhood(h, x, k)) {
          for (oracle::Mask y = z;; y = (y - 1) & z) {
            if (static_cast<std::size_t>(__builtin_popcount(y)) == k - j) expected.insert(y);
            if (y == 0) break;
          }
        }
        std::set<oracle::Mask> got;
        for (std::size_t i = 0; i < wh.base().num_edges(); ++i) {
          const auto& y = wh.base().edges()[i];
          got.insert(oracle::to_mask(y));
          const auto want = oracle::neighborhood(h, hmis::set_union(x, y), j).size();
          CHECK(wh.weights()[i] == static_cast<double>(want));
          CHECK(wh.weights()[i] >= 1.0);
        }
        CHECK(got == expected);
      }
    }
  }
}

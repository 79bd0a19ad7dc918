#include <cmath>
#include <random>

#include "hmis/baseline.hpp"
#include "hmis/generate.hpp"
#include "hmis/report.hpp"
#include "hmis/sbl.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using hmis::Errc;
using hmis::Hypergraph;
using hmis::SblConfig;
using hmis::VertexSet;

namespace {

SblConfig small_config(std::uint64_t seed) {
  SblConfig cfg;
  cfg.seed = seed;
  cfg.p_override = 0.35;
  cfg.d_cap_override = 3;
  cfg.fail_policy = hmis::FailPolicy::FallbackGreedy;
  return cfg;
}

}  // namespace

TEST_CASE("derive_params at n = 2^16") {
  const auto p = hmis::derive_params(1 << 16, 8, SblConfig{});
  CHECK(p.alpha == 0.5);
  CHECK(p.p == std::ldexp(1.0, -8));
  CHECK(p.d_formula == 0.5);
  CHECK(p.d == 3);
  CHECK(p.stop_threshold == 1 << 16);
  CHECK(p.beta == 0.125);
  CHECK_FALSE(p.within_edge_bound);
  CHECK(hmis::derive_params(1 << 16, 4, SblConfig{}).within_edge_bound);
  CHECK(p.max_rounds == static_cast<std::size_t>(std::ceil(2.0 * 16 / std::ldexp(1.0, -8))));
}

TEST_CASE("derive_params overrides pass through") {
  SblConfig cfg;
  cfg.p_override = 0.3;
  cfg.d_cap_override = 4;
  const auto p = hmis::derive_params(100, 10, cfg);
  CHECK(p.p == 0.3);
  CHECK(p.d == 4);
  CHECK(p.stop_threshold == 12);
}

TEST_CASE("derive_params degenerate inputs") {
  CHECK_ERRC(hmis::derive_params(4, 1, SblConfig{}), Errc::DegenerateParams);
  CHECK_ERRC(hmis::derive_params(1, 0, SblConfig{}), Errc::Precondition);
  SblConfig cfg;
  cfg.p_override = 0.5;
  const auto p = hmis::derive_params(4, 1, cfg);
  CHECK(p.d == 3);
  CHECK(p.stop_threshold == 4);
  cfg.d_cap_override = 1;
  CHECK_ERRC(hmis::derive_params(4, 1, cfg), Errc::Precondition);
}

TEST_CASE("apply_sample examples") {
  const Hypergraph h0 = testutil::h0();
  const auto out = hmis::apply_sample(h0, {3, 4}, {4});
  CHECK(out.next.edges() == std::vector<VertexSet>{{5}});
  CHECK(out.next.vertices() == VertexSet{1, 2, 5});
  CHECK(out.edges_removed_red == 2);
  CHECK(out.edges_shrunk == 1);

  const auto same = hmis::apply_sample(h0, {}, {});
  CHECK(same.next == h0);
}

TEST_CASE("apply_sample rejects a non-independent blue set") {
  CHECK_ERRC(hmis::apply_sample(testutil::h0(), {3, 4}, {3, 4}), Errc::InternalInvariant);
}

TEST_CASE("dimension gate") {
  // p = 1 samples everything; the 4-edge always survives induction.
  const Hypergraph h(6, {{1, 2, 3, 4}, {5, 6}});
  SblConfig cfg;
  cfg.p_override = 1.0;
  cfg.d_cap_override = 3;
  cfg.max_retries_per_round = 2;
  const auto params = hmis::derive_params(6, 2, cfg);
  CHECK_ERRC(hmis::sbl_round(h, params, cfg, 1), Errc::DimensionGateExhausted);

  cfg.fail_policy = hmis::FailPolicy::FallbackGreedy;
  const auto out = hmis::sbl_round(h, params, cfg, 1);
  CHECK(out.record.gate_fallback);
  CHECK(out.record.retries == 2);
  CHECK(out.record.induced_dim == 4);
  CHECK(hmis::is_maximal_independent(h, out.record.blue));
  CHECK(out.next.vertices().empty());
}

TEST_CASE("run_sbl examples") {
  SblConfig free_cfg;
  free_cfg.p_override = 0.3;
  free_cfg.d_cap_override = 3;
  CHECK(hmis::run_sbl(Hypergraph(50, {}), free_cfg).mis == VertexSet::range(1, 50));

  const auto all = hmis::enumerate_all_mis(testutil::h0());
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    SblConfig cfg;
    cfg.seed = seed;
    cfg.p_override = 0.5;
    cfg.d_cap_override = 3;
    const auto r = hmis::run_sbl(testutil::h0(), cfg);
    CHECK(r.fallback == hmis::FinalPhase::BlDirectRan);
    CHECK(r.direct.has_value());
    CHECK(std::binary_search(all.begin(), all.end(), r.mis));
  }

  hmis::GenSpec spec;
  spec.n = 60;
  spec.kind = hmis::GenKind::UniformD;
  spec.dim_min = spec.dim_max = 6;
  spec.m = 120;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    spec.seed = seed;
    const Hypergraph h = hmis::gen(spec);
    const auto r = hmis::run_sbl(h, small_config(seed));
    CHECK(r.fallback == hmis::FinalPhase::GreedyRan);
    CHECK(r.status == hmis::SolverStatus::Ok);
    CHECK(hmis::is_maximal_independent(h, r.mis));
  }
}

TEST_CASE("run_sbl agrees with the oracle on small instances") {
  std::mt19937_64 rng(51);
  for (int it = 0; it < 200; ++it) {
    const std::size_t n = 2 + rng() % 14;
    const Hypergraph h = oracle::random_hypergraph(rng, n, rng() % 14, 1, 6);
    const auto truth = oracle::all_mis(h);
    SblConfig cfg = small_config(rng());
    cfg.check_invariants = true;
    cfg.stop_threshold_override = 1 + rng() % 4;
    const auto r = hmis::run_sbl(h, cfg);
    CHECK(r.status == hmis::SolverStatus::Ok);
    CHECK(truth.contains(std::vector<hmis::Vertex>(r.mis.begin(), r.mis.end())));
  }
}

TEST_CASE("round records partition the vertex set") {
  hmis::GenSpec spec;
  spec.n = 400;
  spec.kind = hmis::GenKind::MixedDims;
  spec.dim_min = 2;
  spec.dim_max = 6;
  spec.m = 500;
  spec.seed = 4;
  const Hypergraph h = hmis::gen(spec);
  SblConfig cfg;
  cfg.seed = 9;
  cfg.p_override = 0.1;
  cfg.d_cap_override = 3;
  cfg.stop_threshold_override = 60;
  cfg.fail_policy = hmis::FailPolicy::FallbackGreedy;
  const auto r = hmis::run_sbl(h, cfg);
  REQUIRE(r.rounds.size() > 0);
  CHECK(r.loop_exit == hmis::LoopExit::StopThreshold);

  VertexSet blue;
  VertexSet red;
  std::size_t remaining = h.num_vertices();
  std::size_t retries = 0;
  for (const auto& rec : r.rounds) {
    CHECK(rec.retries <= cfg.max_retries_per_round);
    if (!rec.gate_fallback) CHECK(rec.induced_dim <= 3);
    CHECK(hmis::set_union(rec.blue, rec.red) == rec.sampled);
    CHECK_FALSE(rec.blue.intersects(rec.red));
    CHECK_FALSE(rec.sampled.intersects(hmis::set_union(blue, red)));
    blue = hmis::set_union(blue, rec.blue);
    red = hmis::set_union(red, rec.red);
    CHECK(hmis::is_independent(h, blue));
    CHECK(rec.remaining_n == remaining - rec.sampled.size());
    remaining = rec.remaining_n;
    retries += rec.retries;
  }
  CHECK(remaining < 60);
  CHECK(retries == r.retries_total);
  CHECK(blue.is_subset_of(r.mis));
  CHECK_FALSE(red.intersects(r.mis));
  CHECK(hmis::is_maximal_independent(h, r.mis));
}

TEST_CASE("max_rounds exit still finishes with greedy") {
  const Hypergraph h(40, {{1, 2, 3, 4}, {5, 6, 7}, {8, 9}});
  SblConfig cfg = small_config(2);
  cfg.max_rounds = 1;
  cfg.stop_threshold_override = 1;
  const auto r = hmis::run_sbl(h, cfg);
  CHECK(r.rounds.size() == 1);
  CHECK(r.loop_exit == hmis::LoopExit::MaxRounds);
  CHECK(r.status == hmis::SolverStatus::Ok);
  CHECK(hmis::is_maximal_independent(h, r.mis));
}

TEST_CASE("identical inputs give byte-identical output") {
  hmis::GenSpec spec;
  spec.n = 5000;
  spec.kind = hmis::GenKind::UniformD;
  spec.dim_min = spec.dim_max = 5;
  spec.m = 8000;
  spec.seed = 1;
  const Hypergraph h = hmis::gen(spec);
  SblConfig a;
  a.seed = 77;
  a.p_override = 0.9;
  a.d_cap_override = 4;
  a.stop_threshold_override = 100;
  a.fail_policy = hmis::FailPolicy::FallbackGreedy;
  SblConfig b = a;
  b.threads = 4;
  const auto ra = hmis::run_sbl(h, a);
  const auto rb = hmis::run_sbl(h, b);
  CHECK(hmis::trace_jsonl(ra) == hmis::trace_jsonl(rb));
  CHECK(hmis::result_json(ra).dump() == hmis::result_json(rb).dump());
  CHECK(hmis::result_json(ra).dump() == hmis::result_json(hmis::run_sbl(h, a)).dump());
}

TEST_CASE("result JSON has the documented fields") {
  const auto r = hmis::run_sbl(testutil::h0(), small_config(1));
  const auto j = hmis::result_json(r);
  for (const char* key : {"mis", "status", "rounds_used", "retries_total", "fallback"}) CHECK(j.contains(key));
  CHECK(j["fallback"] == "bl-direct-ran");
  CHECK(j["status"] == "ok");
}

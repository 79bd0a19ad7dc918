#include "hmis/generate.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_set>

#include "hmis/error.hpp"
#include "hmis/rng.hpp"

namespace hmis {

namespace {

constexpr std::uint64_t kEnumerateLimit = 20'000'000;

// Sequential draws from a counter stream.
class Draws {
 public:
  explicit Draws(std::uint64_t seed) : stream_(CounterStream(seed).derive(0x47454eULL)) {}

  /// Uniform in [0, bound) by rejection, so no modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
      const std::uint64_t x = stream_.bits(counter_++);
      if (x < limit) return x % bound;
    }
  }
  bool bernoulli(double p) { return stream_.bernoulli(counter_++, p); }

 private:
  CounterStream stream_;
  std::uint64_t counter_ = 0;
};

// Floyd's algorithm: uniform k-subset of [1, n].
VertexSet random_subset(std::size_t n, std::size_t k, Draws& rng) {
  std::vector<Vertex> chosen;
  chosen.reserve(k);
  for (std::size_t j = n - k + 1; j <= n; ++j) {
    const auto t = static_cast<Vertex>(rng.below(j) + 1);
    const bool seen = std::find(chosen.begin(), chosen.end(), t) != chosen.end();
    chosen.push_back(seen ? static_cast<Vertex>(j) : t);
  }
  return VertexSet::from_unsorted(std::move(chosen));
}

// Calls visit(subset) for every k-subset of [1, n] in lexicographic order.
template <class Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  std::vector<Vertex> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = static_cast<Vertex>(i + 1);
  for (;;) {
    visit(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i) --i;
    if (i == 0) return;
    ++c[i - 1];
    for (std::size_t t = i; t < k; ++t) c[t] = c[t - 1] + 1;
  }
}

std::uint64_t candidate_count(const GenSpec& s) {
  std::uint64_t total = 0;
  for (std::size_t d = s.dim_min; d <= s.dim_max; ++d) {
    const std::uint64_t c = binomial(s.n, d);
    total = c > std::numeric_limits<std::uint64_t>::max() - total ? std::numeric_limits<std::uint64_t>::max() : total + c;
  }
  return total;
}

void validate(const GenSpec& s) {
  if (s.n < 1) throw Error(Errc::Precondition, "gen needs n >= 1");
  if (s.dim_min < 2 || s.dim_max < s.dim_min) throw Error(Errc::Precondition, "gen needs 2 <= dim_min <= dim_max");
  if (s.dim_max > s.n) throw Error(Errc::Infeasible, "edge size exceeds n");
  if (s.kind == GenKind::UniformD && s.dim_min != s.dim_max) {
    throw Error(Errc::Precondition, "uniform-d takes a single dimension");
  }
  if (s.m.has_value() == s.edge_prob.has_value()) throw Error(Errc::Precondition, "give exactly one of m and edge_prob");
  if (s.edge_prob) {
    if (!(*s.edge_prob >= 0.0 && *s.edge_prob <= 1.0)) throw Error(Errc::Precondition, "edge_prob must lie in [0, 1]");
    if (s.kind == GenKind::Linear) throw Error(Errc::Precondition, "linear instances need an explicit m");
  }
  if (s.n > std::numeric_limits<Vertex>::max()) throw Error(Errc::Precondition, "n too large");
}

Hypergraph by_probability(const GenSpec& s, Draws& rng) {
  if (candidate_count(s) > kEnumerateLimit) throw Error(Errc::WorkBudget, "too many candidate edges to sample by probability");
  std::vector<VertexSet> edges;
  for (std::size_t d = s.dim_min; d <= s.dim_max; ++d) {
    for_each_subset(s.n, d, [&](const std::vector<Vertex>& c) {
      if (rng.bernoulli(*s.edge_prob)) edges.push_back(VertexSet::from_sorted(c));
    });
  }
  return normalize(Hypergraph(s.n, std::move(edges)));
}

Hypergraph uniform(const GenSpec& s, std::size_t m, Draws& rng) {
  const std::size_t d = s.dim_min;
  const std::uint64_t total = binomial(s.n, d);
  if (m > total) {
    throw Error(Errc::Infeasible, "m=" + std::to_string(m) + " exceeds the " + std::to_string(total) + " distinct " +
                                      std::to_string(d) + "-subsets");
  }
  std::vector<VertexSet> edges;
  if (total <= kEnumerateLimit && m * 4 >= total) {
    // Dense: partial shuffle of all subsets.
    for_each_subset(s.n, d, [&](const std::vector<Vertex>& c) { edges.push_back(VertexSet::from_sorted(c)); });
    for (std::size_t i = 0; i < m; ++i) std::swap(edges[i], edges[i + rng.below(edges.size() - i)]);
    edges.resize(m);
  } else {
    std::unordered_set<VertexSet, VertexSetHash> seen;
    while (edges.size() < m) {
      VertexSet e = random_subset(s.n, d, rng);
      if (seen.insert(e).second) edges.push_back(std::move(e));
    }
  }
  return normalize(Hypergraph(s.n, std::move(edges)));
}

std::size_t attempt_budget(std::size_t m) { return 1000 + 200 * m; }

Hypergraph mixed(const GenSpec& s, std::size_t m, Draws& rng) {
  std::vector<VertexSet> edges;
  const std::size_t budget = attempt_budget(m);
  for (std::size_t attempt = 0; edges.size() < m; ++attempt) {
    if (attempt == budget) {
      throw Error(Errc::Infeasible, "placed only " + std::to_string(edges.size()) + " of " + std::to_string(m) +
                                        " pairwise incomparable edges");
    }
    const std::size_t d = s.dim_min + rng.below(s.dim_max - s.dim_min + 1);
    VertexSet e = random_subset(s.n, d, rng);
    const bool comparable = std::any_of(edges.begin(), edges.end(), [&](const VertexSet& f) {
      return f.size() <= e.size() ? f.is_subset_of(e) : e.is_subset_of(f);
    });
    if (!comparable) edges.push_back(std::move(e));
  }
  return normalize(Hypergraph(s.n, std::move(edges)));
}

Hypergraph linear(const GenSpec& s, std::size_t m, Draws& rng) {
  std::vector<VertexSet> edges;
  std::unordered_set<std::uint64_t> used_pairs;
  auto pair_key = [](Vertex a, Vertex b) { return std::uint64_t{a} << 32 | b; };
  const std::size_t budget = attempt_budget(m);
  for (std::size_t attempt = 0; edges.size() < m; ++attempt) {
    if (attempt == budget) {
      throw Error(Errc::Infeasible, "linear constraint saturated after placing " + std::to_string(edges.size()) +
                                        " of " + std::to_string(m) + " edges");
    }
    const std::size_t d = s.dim_min + rng.below(s.dim_max - s.dim_min + 1);
    VertexSet e = random_subset(s.n, d, rng);
    bool clash = false;
    for (std::size_t a = 0; a < e.size() && !clash; ++a) {
      for (std::size_t b = a + 1; b < e.size() && !clash; ++b) clash = used_pairs.contains(pair_key(e[a], e[b]));
    }
    if (clash) continue;
    for (std::size_t a = 0; a < e.size(); ++a) {
      for (std::size_t b = a + 1; b < e.size(); ++b) used_pairs.insert(pair_key(e[a], e[b]));
    }
    edges.push_back(std::move(e));
  }
  return normalize(Hypergraph(s.n, std::move(edges)));
}

}  // namespace

std::string_view to_string(GenKind k) {
  switch (k) {
    case GenKind::UniformD: return "uniform-d";
    case GenKind::MixedDims: return "mixed-dims";
    case GenKind::Linear: return "linear";
  }
  return "unknown";
}

GenKind parse_gen_kind(std::string_view s) {
  if (s == "uniform-d") return GenKind::UniformD;
  if (s == "mixed-dims") return GenKind::MixedDims;
  if (s == "linear") return GenKind::Linear;
  throw Error(Errc::Precondition, "unknown generator kind \"" + std::string(s) + "\"");
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

Hypergraph gen(const GenSpec& spec) {
  validate(spec);
  Draws rng(spec.seed);
  if (spec.edge_prob) return by_probability(spec, rng);
  const std::size_t m = *spec.m;
  if (m > candidate_count(spec)) throw Error(Errc::Infeasible, "m exceeds the number of distinct candidate edges");
  switch (spec.kind) {
    case GenKind::UniformD: return uniform(spec, m, rng);
    case GenKind::MixedDims: return mixed(spec, m, rng);
    case GenKind::Linear: return linear(spec, m, rng);
  }
  throw Error(Errc::Precondition, "unknown generator kind");
}

}  // namespace hmis

#include "hmis/baseline.hpp"

#include <algorithm>
#include <string>

#include "hmis/error.hpp"
#include "hmis/rng.hpp"

namespace hmis {

VertexOrder::VertexOrder(const Hypergraph& h, std::vector<Vertex> order) : order_(std::move(order)) {
  std::vector<Vertex> sorted = order_;
  std::sort(sorted.begin(), sorted.end());
  if (!std::equal(sorted.begin(), sorted.end(), h.vertices().begin(), h.vertices().end())) {
    throw Error(Errc::Precondition, "vertex order is not a permutation of the vertex set");
  }
}

VertexOrder VertexOrder::ascending(const Hypergraph& h) {
  return VertexOrder(std::vector<Vertex>(h.vertices().begin(), h.vertices().end()));
}

VertexOrder VertexOrder::shuffled(const Hypergraph& h, std::uint64_t seed) {
  std::vector<Vertex> ids(h.vertices().begin(), h.vertices().end());
  const CounterStream stream = CounterStream(seed).derive(0x5348554646ULL);
  for (std::size_t i = ids.size(); i > 1; --i) {
    const std::size_t j = stream.bits(i) % i;
    std::swap(ids[i - 1], ids[j]);
  }
  return VertexOrder(std::move(ids));
}

VertexSet greedy_mis(const Hypergraph& h, const VertexOrder& order) {
  const Incidence inc(h);
  std::vector<char> in(h.universe() + 1, 0);
  for (Vertex v : order.ids()) {
    bool blocked = false;
    for (std::uint32_t ei : inc.edges_of(v)) {
      const auto& e = h.edges()[ei];
      if (std::all_of(e.begin(), e.end(), [&](Vertex u) { return u == v || in[u] != 0; })) {
        blocked = true;
        break;
      }
    }
    if (!blocked) in[v] = 1;
  }
  std::vector<Vertex> out;
  for (Vertex v : h.vertices()) {
    if (in[v]) out.push_back(v);
  }
  return VertexSet::from_sorted(std::move(out));
}

std::vector<VertexSet> enumerate_all_mis(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  if (n > kEnumerationLimit) {
    throw Error(Errc::TooLarge, std::to_string(n) + " vertices exceeds the enumeration limit of " +
                                    std::to_string(kEnumerationLimit));
  }
  // Bit b stands for the b-th active vertex.
  std::vector<std::uint32_t> bit_of(h.universe() + 1, 0);
  for (std::size_t b = 0; b < n; ++b) bit_of[h.vertices()[b]] = b;
  std::vector<std::vector<std::uint32_t>> edges_by_low(n);
  for (const auto& e : h.edges()) {
    std::uint32_t mask = 0;
    for (Vertex v : e) mask |= std::uint32_t{1} << bit_of[v];
    edges_by_low[__builtin_ctz(mask)].push_back(mask);
  }

  // independent[S] = independent[S minus its lowest bit] and no edge whose
  // lowest vertex is that bit fits in S. Edges with a higher lowest bit were
  // already ruled out for the smaller set.
  const std::uint32_t total = std::uint32_t{1} << n;
  std::vector<char> independent(total, 0);
  independent[0] = 1;
  for (std::uint32_t s = 1; s < total; ++s) {
    const std::uint32_t low = __builtin_ctz(s);
    if (!independent[s & (s - 1)]) continue;
    bool ok = true;
    for (std::uint32_t em : edges_by_low[low]) {
      if ((em & s) == em) {
        ok = false;
        break;
      }
    }
    independent[s] = ok;
  }

  std::vector<VertexSet> out;
  for (std::uint32_t s = 0; s < total; ++s) {
    if (!independent[s]) continue;
    bool maximal = true;
    for (std::size_t b = 0; b < n && maximal; ++b) {
      const std::uint32_t bit = std::uint32_t{1} << b;
      if (!(s & bit) && independent[s | bit]) maximal = false;
    }
    if (!maximal) continue;
    std::vector<Vertex> ids;
    for (std::size_t b = 0; b < n; ++b) {
      if (s >> b & 1U) ids.push_back(h.vertices()[b]);
    }
    out.push_back(VertexSet::from_sorted(std::move(ids)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hmis

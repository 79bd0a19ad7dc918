#include "hmis/degree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_map>

#include "hmis/error.hpp"

namespace hmis {

namespace {

// a^k into out; false on overflow.
bool checked_pow(std::uint64_t a, std::uint32_t k, unsigned __int128& out) {
  unsigned __int128 r = 1;
  const unsigned __int128 cap = ~static_cast<unsigned __int128>(0) >> 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    if (a != 0 && r > cap / a) return false;
    r *= a;
  }
  out = r;
  return true;
}

std::uint64_t pack_pair(Vertex a, Vertex b) { return (static_cast<std::uint64_t>(a) << 32) | b; }

}  // namespace

double NormalizedDegree::value() const {
  if (count == 0) return 0.0;
  if (arity == 1) return static_cast<double>(count);
  const double approx = std::pow(static_cast<double>(count), 1.0 / arity);
  const double rounded = std::round(approx);
  unsigned __int128 p = 0;
  if (checked_pow(static_cast<std::uint64_t>(rounded), arity, p) && p == count) return rounded;
  return approx;
}

std::strong_ordering operator<=>(const NormalizedDegree& a, const NormalizedDegree& b) {
  if (a.count == 0 || b.count == 0) return (a.count != 0) <=> (b.count != 0);
  const double la = std::log2(static_cast<double>(a.count)) / a.arity;
  const double lb = std::log2(static_cast<double>(b.count)) / b.arity;
  if (std::abs(la - lb) > 1e-9 * std::max(1.0, std::abs(la))) return la < lb ? std::strong_ordering::less
                                                                            : std::strong_ordering::greater;
  unsigned __int128 lhs = 0;
  unsigned __int128 rhs = 0;
  if (checked_pow(a.count, b.arity, lhs) && checked_pow(b.count, a.arity, rhs)) return lhs <=> rhs;
  // Beyond 127 bits the logs were within 1e-9; treat as tied.
  return std::strong_ordering::equal;
}

std::vector<VertexSet> neighborhood(const Hypergraph& h, const VertexSet& x, std::size_t j) {
  if (x.empty()) throw Error(Errc::Precondition, "neighborhood requires a non-empty x");
  const std::size_t d = h.dimension();
  if (j < 1 || x.size() + j > d) {
    throw Error(Errc::BadArity, "j=" + std::to_string(j) + " outside [1, " + std::to_string(d) + " - |x|]");
  }
  std::vector<VertexSet> out;
  for (const auto& e : h.edges()) {
    if (e.size() == x.size() + j && x.is_subset_of(e)) out.push_back(set_difference(e, x));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t degree_work(const Hypergraph& h) {
  std::uint64_t total = 0;
  for (const auto& e : h.edges()) {
    if (e.size() >= 63) return std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t w = std::uint64_t{1} << e.size();
    if (total > std::numeric_limits<std::uint64_t>::max() - w) return std::numeric_limits<std::uint64_t>::max();
    total += w;
  }
  return total;
}

DegreeProfile degree_profile(const Hypergraph& h) {
  // Distinct edges give distinct y = e \ x, so |N_{i-|x|}(x)| is the number
  // of size-i edges containing x. Count those per (i, x).
  const std::size_t d = h.dimension();
  if (d < 2) throw Error(Errc::NoEdges, "no edge of size >= 2; Δ is undefined");
  if (d > 40) throw Error(Errc::WorkBudget, "edge of size " + std::to_string(d) + " is too large to enumerate");

  std::vector<std::vector<std::uint32_t>> singles(d + 1);
  std::vector<std::vector<std::uint64_t>> pairs(d + 1);
  std::vector<std::unordered_map<VertexSet, std::uint32_t, VertexSetHash>> larger(d + 1);

  std::vector<Vertex> buf;
  for (const auto& e : h.edges()) {
    const std::size_t i = e.size();
    if (i < 2) continue;
    if (singles[i].empty()) singles[i].assign(h.universe() + 1, 0);
    for (Vertex v : e) ++singles[i][v];
    if (i >= 3) {
      for (std::size_t a = 0; a < i; ++a) {
        for (std::size_t b = a + 1; b < i; ++b) pairs[i].push_back(pack_pair(e[a], e[b]));
      }
    }
    if (i >= 4) {
      const std::uint64_t full = (std::uint64_t{1} << i) - 1;
      for (std::uint64_t mask = 1; mask < full; ++mask) {
        const int pc = __builtin_popcountll(mask);
        if (pc < 3) continue;
        buf.clear();
        for (std::size_t b = 0; b < i; ++b) {
          if (mask >> b & 1U) buf.push_back(e[b]);
        }
        ++larger[i][VertexSet::from_sorted(buf)];
      }
    }
  }

  DegreeProfile prof;
  prof.dim = d;
  NormalizedDegree overall;
  for (std::size_t i = 2; i <= d; ++i) {
    NormalizedDegree best;
    auto consider = [&](std::uint64_t count, std::size_t xsize) {
      const NormalizedDegree cand{count, static_cast<std::uint32_t>(i - xsize)};
      if (best < cand) best = cand;
    };
    for (std::uint32_t c : singles[i]) {
      if (c != 0) consider(c, 1);
    }
    auto& pv = pairs[i];
    std::sort(pv.begin(), pv.end());
    for (std::size_t a = 0; a < pv.size();) {
      std::size_t b = a;
      while (b < pv.size() && pv[b] == pv[a]) ++b;
      consider(b - a, 2);
      a = b;
    }
    for (const auto& [x, c] : larger[i]) consider(c, x.size());
    prof.delta_i_exact[i] = best;
    prof.delta_i[i] = best.value();
    if (overall < best) overall = best;
  }
  prof.delta = overall.value();
  return prof;
}

}  // namespace hmis

#include "hmis/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>
#include <unordered_map>

#include "hmis/degree.hpp"
#include "hmis/error.hpp"

namespace hmis {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::int64_t checked_mul_add(std::int64_t a, std::int64_t b, std::int64_t c) {
  std::int64_t prod = 0;
  std::int64_t sum = 0;
  if (__builtin_mul_overflow(a, b, &prod) || __builtin_add_overflow(prod, c, &sum)) {
    throw Error(Errc::Precondition, "potential recurrence overflows 64 bits; dimension too large");
  }
  return sum;
}

}  // namespace

WeightedHypergraph::WeightedHypergraph(Hypergraph base, std::vector<double> weights)
    : base_(std::move(base)), weights_(std::move(weights)) {
  if (weights_.size() != base_.num_edges()) throw Error(Errc::Precondition, "one weight per edge required");
  for (double w : weights_) {
    if (!(w > 0.0)) throw Error(Errc::Precondition, "edge weights must be positive");
  }
}

WeightedHypergraph WeightedHypergraph::unit(Hypergraph base) {
  std::vector<double> w(base.num_edges(), 1.0);
  return WeightedHypergraph(std::move(base), std::move(w));
}

double WeightedHypergraph::total_weight() const { return std::accumulate(weights_.begin(), weights_.end(), 0.0); }

double eval_S(const WeightedHypergraph& wh, const VertexSet& coloring) {
  double s = 0.0;
  const auto& edges = wh.base().edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].is_subset_of(coloring)) s += wh.weights()[i];
  }
  return s;
}

double eval_P(const WeightedHypergraph& wh, double p, const VertexSet& x) {
  double s = 0.0;
  const auto& edges = wh.base().edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (x.is_subset_of(edges[i])) s += wh.weights()[i] * std::pow(p, static_cast<double>(edges[i].size() - x.size()));
  }
  return s;
}

double eval_D(const WeightedHypergraph& wh, double p) {
  std::unordered_map<VertexSet, double, VertexSetHash> partial;
  double empty_term = 0.0;
  std::vector<Vertex> buf;
  const auto& edges = wh.base().edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (e.size() > 30) throw Error(Errc::WorkBudget, "edge too large to enumerate subsets");
    const double w = wh.weights()[i];
    empty_term += w * std::pow(p, static_cast<double>(e.size()));
    const std::uint64_t total = std::uint64_t{1} << e.size();
    for (std::uint64_t mask = 1; mask < total; ++mask) {
      buf.clear();
      for (std::size_t b = 0; b < e.size(); ++b) {
        if (mask >> b & 1U) buf.push_back(e[b]);
      }
      partial[VertexSet::from_sorted(buf)] += w * std::pow(p, static_cast<double>(e.size() - buf.size()));
    }
  }
  double best = empty_term;
  for (const auto& [x, value] : partial) best = std::max(best, value);
  return best;
}

std::string_view to_string(RecurrenceVariant v) {
  return v == RecurrenceVariant::KelsenOriginal ? "original" : "modified";
}

Recurrence recurrence(std::size_t d, RecurrenceVariant variant) {
  if (d < 2) throw Error(Errc::Precondition, "recurrence needs d >= 2");
  Recurrence r;
  r.variant = variant;
  r.d = d;
  const auto c = static_cast<std::int64_t>(variant == RecurrenceVariant::KelsenOriginal ? 7 : d * d);
  r.F[1] = 0;
  for (std::size_t i = 2; i <= d; ++i) {
    const std::int64_t fi = checked_mul_add(static_cast<std::int64_t>(i - 1), r.F[i - 1], c);
    r.f[i] = fi;
    r.F[i] = checked_mul_add(1, r.F[i - 1], fi);
  }
  return r;
}

PotentialReport potential_report(const Hypergraph& h, RecurrenceVariant variant) {
  const DegreeProfile prof = degree_profile(h);
  const std::size_t n = h.num_vertices();
  if (n < 3) throw Error(Errc::Precondition, "potential report needs n >= 3");

  PotentialReport r;
  r.variant = variant;
  r.d = prof.dim;
  r.n = n;
  r.log_n = std::log2(static_cast<double>(n));
  r.rec = recurrence(r.d, variant);
  r.delta_i = prof.delta_i;
  const double lg_log_n = std::log2(r.log_n);
  const std::size_t d = r.d;

  r.log2_v[d] = std::log2(prof.delta_i.at(d));
  for (std::size_t i = d - 1; i >= 2; --i) {
    const double lifted = static_cast<double>(r.rec.f.at(i)) * lg_log_n + r.log2_v[i + 1];
    r.log2_v[i] = std::max(std::log2(prof.delta_i.at(i)), lifted);
  }
  for (const auto& [i, lv] : r.log2_v) r.v[i] = lv > 1023.0 ? kInf : std::exp2(lv);

  for (std::size_t j = 2; j <= d; ++j) {
    const auto Fp = static_cast<double>(r.rec.F.at(j - 1));
    r.log2_T[j] = r.log2_v[2] - Fp * lg_log_n;
    r.log2_q[j] = static_cast<double>(d * (d + 1)) + std::log2(lg_log_n) +
                  (Fp * static_cast<double>(j - 1) + 2.0) * lg_log_n;
  }
  for (std::size_t j = 2; j < d; ++j) {
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    for (std::size_t k = j + 1; k <= d; ++k) {
      const std::int64_t e = (std::int64_t{1} << (k - j + 1)) + static_cast<std::int64_t>(j) * r.rec.F.at(j - 1) -
                             r.rec.F.at(k - 1) + 2;
      best = std::max(best, e);
    }
    r.migration_exponent[j] = best;
  }
  r.lambda_n = 2.0 * lg_log_n / r.log_n;
  return r;
}

std::vector<FInequalityRow> f_inequality_check(std::size_t d, RecurrenceVariant variant) {
  const Recurrence r = recurrence(d, variant);
  std::vector<FInequalityRow> rows;
  for (std::size_t j = 2; j <= d; ++j) {
    FInequalityRow row;
    row.d = d;
    row.j = j;
    row.F_j = r.F.at(j);
    row.required = checked_mul_add(r.F.at(j - 1), static_cast<std::int64_t>(j), 5);
    row.holds = row.F_j >= row.required;
    rows.push_back(row);
  }
  return rows;
}

BoundConstants kelsen_constants(const Hypergraph& h, double p, std::optional<double> delta_param) {
  BoundConstants c;
  c.n = h.num_vertices();
  c.m = h.num_edges();
  c.d = h.dimension();
  c.p = p;
  if (c.n < 3) throw Error(Errc::Precondition, "bound constants need n >= 3");
  if (c.d == 0) throw Error(Errc::NoEdges, "bound constants need an edge");

  const double log_n = std::log2(static_cast<double>(c.n));
  c.delta_param = delta_param.value_or(log_n * log_n);
  const double d = static_cast<double>(c.d);

  c.log2_k_H = (std::exp2(d) - 1.0) * std::log2(log_n + 2.0) + std::exp2(d - 1.0) * std::log2(c.delta_param);
  if (c.delta_param <= 1.0) {
    c.log2_p_H = kInf;
  } else {
    const double x = c.delta_param - 1.0;
    c.log2_p_H = (d - 1.0) * (d + std::log2(std::ceil(log_n)) + std::log2(static_cast<double>(c.m))) +
                 std::log2(log_n) + (x / 4.0) * std::log2(4.0 * std::numbers::e / x);
  }
  c.log2_corollary_factor = std::exp2(d + 1.0) * std::log2(log_n);
  double log_fact = 0.0;
  for (std::size_t t = 1; t <= c.d; ++t) {
    log_fact += std::log(static_cast<double>(t));
    c.kimvu_a[t] = std::pow(8.0, static_cast<double>(t)) * std::exp(0.5 * log_fact);
    c.increase_exponent_kelsen[t] = std::int64_t{1} << std::min<std::size_t>(t + 1, 62);
    c.increase_exponent_kimvu[t] = static_cast<std::int64_t>(2 * t);
  }
  return c;
}

WeightedHypergraph migration_hypergraph(const Hypergraph& h, const VertexSet& x, std::size_t j, std::size_t k) {
  const std::size_t d = h.dimension();
  if (x.empty()) throw Error(Errc::Precondition, "migration hypergraph needs a non-empty x");
  if (j < 1 || j >= k || x.size() + k > d) {
    throw Error(Errc::BadArity, "need 1 <= j < k <= d - |x|; got j=" + std::to_string(j) + ", k=" +
                                    std::to_string(k) + ", d=" + std::to_string(d) + ", |x|=" +
                                    std::to_string(x.size()));
  }
  const std::size_t t = k - j;
  std::vector<VertexSet> ys;
  for (const auto& z : neighborhood(h, x, k)) {
    // All t-subsets of z, via bitmasks over its k positions.
    const std::uint64_t total = std::uint64_t{1} << z.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      if (static_cast<std::size_t>(__builtin_popcountll(mask)) != t) continue;
      std::vector<Vertex> y;
      for (std::size_t b = 0; b < z.size(); ++b) {
        if (mask >> b & 1U) y.push_back(z[b]);
      }
      ys.push_back(VertexSet::from_sorted(std::move(y)));
    }
  }
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

  std::vector<VertexSet> edges;
  std::vector<double> weights;
  for (auto& y : ys) {
    const auto w = neighborhood(h, set_union(x, y), j).size();
    if (w == 0) continue;
    edges.push_back(std::move(y));
    weights.push_back(static_cast<double>(w));
  }
  return WeightedHypergraph(Hypergraph(h.universe(), h.vertices(), std::move(edges)), std::move(weights));
}

}  // namespace hmis

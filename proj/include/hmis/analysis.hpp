#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "hmis/hypergraph.hpp"

namespace hmis {

/// A hypergraph with a positive weight per edge (parallel to base.edges()).
class WeightedHypergraph {
 public:
  WeightedHypergraph(Hypergraph base, std::vector<double> weights);
  static WeightedHypergraph unit(Hypergraph base);

  const Hypergraph& base() const noexcept { return base_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  double total_weight() const;

 private:
  Hypergraph base_;
  std::vector<double> weights_;
};

/// S = sum of w(e) over edges fully inside the coloring.
double eval_S(const WeightedHypergraph& wh, const VertexSet& coloring);

/// P(x) = sum over edges e containing x of w(e) p^(|e|-|x|).
double eval_P(const WeightedHypergraph& wh, double p, const VertexSet& x);

/// D = max of P(x) over all x. Only the empty set and subsets of edges can
/// be nonzero, so only those are enumerated.
double eval_D(const WeightedHypergraph& wh, double p);

enum class RecurrenceVariant {
  /// f(2) = 7, F(i) = i F(i-1) + 7.
  KelsenOriginal,
  /// F(i) = i F(i-1) + d^2, which keeps the migration claim valid when d
  /// grows with n.
  ModifiedD2,
};

std::string_view to_string(RecurrenceVariant v);

struct Recurrence {
  RecurrenceVariant variant = RecurrenceVariant::ModifiedD2;
  std::size_t d = 0;
  std::map<std::size_t, std::int64_t> f;  ///< 2..d
  std::map<std::size_t, std::int64_t> F;  ///< 1..d, F(1) = 0
};

Recurrence recurrence(std::size_t d, RecurrenceVariant variant);

/// Potentials and stage counts of a hypergraph. Quantities that overflow a
/// double at modest d are kept as base-2 logarithms.
struct PotentialReport {
  RecurrenceVariant variant = RecurrenceVariant::ModifiedD2;
  std::size_t d = 0;
  std::size_t n = 0;
  double log_n = 0.0;
  Recurrence rec;
  std::map<std::size_t, double> delta_i;
  std::map<std::size_t, double> log2_v;  ///< v_i, 2..d
  std::map<std::size_t, double> v;       ///< linear v_i; +inf past double range
  std::map<std::size_t, double> log2_T;  ///< T_j = v_2 / (log n)^F(j-1)
  std::map<std::size_t, double> log2_q;  ///< q_j stage counts
  /// Largest (log n)-exponent of the per-stage migration sum for each j < d,
  /// maximized over k > j: 2^(k-j+1) + j F(j-1) - F(k-1) + 2.
  std::map<std::size_t, std::int64_t> migration_exponent;
  double lambda_n = 0.0;
};

PotentialReport potential_report(const Hypergraph& h, RecurrenceVariant variant);

struct FInequalityRow {
  std::size_t d = 0;
  std::size_t j = 0;
  std::int64_t F_j = 0;
  std::int64_t required = 0;  ///< F(j-1) * j + 5
  bool holds = false;
};

/// Checks F(j) >= F(j-1) j + 5 for 2 <= j <= d.
std::vector<FInequalityRow> f_inequality_check(std::size_t d, RecurrenceVariant variant);

/// Tail-bound constants in log2 form.
struct BoundConstants {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t d = 0;
  double p = 0.0;
  double delta_param = 0.0;
  /// log2 of (log n + 2)^(2^d - 1) * delta^(2^(d-1)).
  double log2_k_H = 0.0;
  /// log2 of (2^d ceil(log n) m)^(d-1) * log n * (4e/(delta-1))^((delta-1)/4);
  /// +inf when delta <= 1.
  double log2_p_H = 0.0;
  /// log2 of (log n)^(2^(d+1)), the delta = log^2 n specialization.
  double log2_corollary_factor = 0.0;
  /// a_t = 8^t sqrt(t!) for 1 <= t <= d.
  std::map<std::size_t, double> kimvu_a;
  /// Per-stage increase exponents of log n for migration distance t = k - j:
  /// 2^(t+1) from the original bound, 2t from the Kim-Vu based one.
  std::map<std::size_t, std::int64_t> increase_exponent_kelsen;
  std::map<std::size_t, std::int64_t> increase_exponent_kimvu;
};

/// delta_param defaults to (log2 n)^2.
BoundConstants kelsen_constants(const Hypergraph& h, double p, std::optional<double> delta_param = std::nullopt);

/// Edges: all (k-j)-subsets Y of members of N_k(x, h); weight |N_j(x ∪ Y, h)|.
/// Requires 1 <= j < k <= dim(h) - |x|.
WeightedHypergraph migration_hypergraph(const Hypergraph& h, const VertexSet& x, std::size_t j, std::size_t k);

}  // namespace hmis

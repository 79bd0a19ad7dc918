#include "hmis/report.hpp"

#include <cmath>

namespace hmis {

namespace {

// JSON has no infinity; non-finite reals become strings.
json real(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

template <class Map>
json real_map(const Map& m) {
  json out = json::object();
  for (const auto& [k, v] : m) out[std::to_string(k)] = real(static_cast<double>(v));
  return out;
}

template <class Map>
json int_map(const Map& m) {
  json out = json::object();
  for (const auto& [k, v] : m) out[std::to_string(k)] = v;
  return out;
}

template <class T>
std::string lines(const std::vector<T>& records) {
  std::string out;
  for (const auto& r : records) {
    out += to_json(r).dump();
    out += '\n';
  }
  return out;
}

}  // namespace

json ids_json(const VertexSet& s) { return json(std::vector<Vertex>(s.begin(), s.end())); }

json to_json(const BlRoundRecord& r) {
  return {{"round", r.round},
          {"marked", ids_json(r.marked)},
          {"unmarked", ids_json(r.unmarked)},
          {"added", ids_json(r.added)},
          {"remaining_vertices", r.remaining_vertices},
          {"remaining_edges", r.remaining_edges},
          {"delta", real(r.delta)},
          {"p_used", real(r.p_used)}};
}

json to_json(const SblRoundRecord& r) {
  return {{"round", r.round},
          {"sampled", ids_json(r.sampled)},
          {"induced_edges", r.induced_edges},
          {"induced_dim", r.induced_dim},
          {"retries", r.retries},
          {"restart_scope", "round"},
          {"gate_fallback", r.gate_fallback},
          {"bl_rounds", r.bl_rounds},
          {"bl_status", to_string(r.bl_status)},
          {"blue", ids_json(r.blue)},
          {"red", ids_json(r.red)},
          {"edges_removed_red", r.edges_removed_red},
          {"edges_shrunk", r.edges_shrunk},
          {"remaining_n", r.remaining_n},
          {"remaining_m", r.remaining_m}};
}

json to_json(const SblParams& p) {
  return {{"alpha", real(p.alpha)},
          {"p", real(p.p)},
          {"d_formula", real(p.d_formula)},
          {"d", p.d},
          {"stop_threshold", p.stop_threshold},
          {"max_rounds", p.max_rounds},
          {"beta", real(p.beta)},
          {"within_edge_bound", p.within_edge_bound}};
}

json to_json(const DegreeProfile& p) {
  json exact = json::object();
  for (const auto& [i, nd] : p.delta_i_exact) exact[std::to_string(i)] = {{"count", nd.count}, {"arity", nd.arity}};
  return {{"dim", p.dim}, {"delta_i", real_map(p.delta_i)}, {"delta_i_exact", exact}, {"delta", real(p.delta)}};
}

json to_json(const PotentialReport& r) {
  return {{"variant", to_string(r.variant)},
          {"d", r.d},
          {"n", r.n},
          {"log_n", real(r.log_n)},
          {"f", int_map(r.rec.f)},
          {"F", int_map(r.rec.F)},
          {"log2_v", real_map(r.log2_v)},
          {"v", real_map(r.v)},
          {"log2_T", real_map(r.log2_T)},
          {"log2_q", real_map(r.log2_q)},
          {"migration_exponent", int_map(r.migration_exponent)},
          {"lambda_n", real(r.lambda_n)}};
}

json to_json(const BoundConstants& c) {
  return {{"n", c.n},
          {"m", c.m},
          {"d", c.d},
          {"p", real(c.p)},
          {"delta", real(c.delta_param)},
          {"log2_k_H", real(c.log2_k_H)},
          {"log2_p_H", real(c.log2_p_H)},
          {"log2_corollary_factor", real(c.log2_corollary_factor)},
          {"kimvu_a", real_map(c.kimvu_a)},
          {"increase_exponent_kelsen", int_map(c.increase_exponent_kelsen)},
          {"increase_exponent_kimvu", int_map(c.increase_exponent_kimvu)}};
}

json to_json(const FInequalityRow& row) {
  return {{"d", row.d}, {"j", row.j}, {"F_j", row.F_j}, {"required", row.required}, {"holds", row.holds}};
}

std::string trace_jsonl(const BlResult& r) { return lines(r.rounds); }

std::string trace_jsonl(const SblResult& r) { return lines(r.rounds); }

json result_json(const SblResult& r) {
  json out = {{"mis", ids_json(r.mis)},
              {"status", to_string(r.status)},
              {"rounds_used", r.rounds.size()},
              {"retries_total", r.retries_total},
              {"fallback", to_string(r.fallback)},
              {"loop_exit", to_string(r.loop_exit)}};
  if (r.direct) out["bl_direct_rounds"] = r.direct->rounds.size();
  return out;
}

}  // namespace hmis

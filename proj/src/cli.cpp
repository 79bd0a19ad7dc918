#include "hmis/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hmis/analysis.hpp"
#include "hmis/baseline.hpp"
#include "hmis/bl.hpp"
#include "hmis/degree.hpp"
#include "hmis/error.hpp"
#include "hmis/generate.hpp"
#include "hmis/io.hpp"
#include "hmis/montecarlo.hpp"
#include "hmis/report.hpp"
#include "hmis/sbl.hpp"

namespace hmis {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// "1,2,3" or "1 2 3".
VertexSet parse_ids(const std::string& text) {
  std::vector<Vertex> ids;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ',' || text[i] == ' ') {
      ++i;
      continue;
    }
    Vertex v = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc() || v == 0) throw UsageError("bad vertex list \"" + text + "\"");
    ids.push_back(v);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return VertexSet::from_unsorted(std::move(ids));
}

std::string ids_text(const VertexSet& s) {
  std::string out;
  for (Vertex v : s) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

// m <= n^beta with beta = log log n / (8 (log log log n)^2), base 2.
json edge_bound(std::size_t n, std::size_t m) {
  const double l1 = std::log2(static_cast<double>(std::max<std::size_t>(n, 1)));
  const double l2 = std::log2(l1);
  const double l3 = l2 > 0 ? std::log2(l2) : -1.0;
  if (!(l3 > 0)) return {{"beta", nullptr}, {"holds", false}, {"defined", false}};
  const double beta = l2 / (8.0 * l3 * l3);
  const bool holds = m == 0 || std::log2(static_cast<double>(m)) <= beta * l1;
  return {{"beta", beta}, {"holds", holds}, {"defined", true}};
}

void report_config(std::ostream& err, const json& cfg, std::size_t n, std::size_t m) {
  json full = cfg;
  full["edge_bound"] = edge_bound(n, m);
  err << "config: " << full.dump() << '\n';
  if (!full["edge_bound"]["defined"].get<bool>()) {
    err << "warning: m <= n^beta is undefined at n=" << n << " (log log log n <= 0)\n";
  } else if (!full["edge_bound"]["holds"].get<bool>()) {
    err << "warning: m=" << m << " exceeds n^beta (beta=" << num(full["edge_bound"]["beta"].get<double>())
        << "); outside the analysed edge-count regime\n";
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::Parse, "cannot write " + path);
  f << text;
}

// ---- gen -------------------------------------------------------------------

struct GenOpts {
  std::size_t n = 0;
  std::string kind = "uniform-d";
  std::size_t m = 0;
  double edge_prob = 0.0;
  std::size_t dim = 3;
  std::size_t dim_min = 0;
  std::size_t dim_max = 0;
  std::uint64_t seed = 0;
  std::string out_path;
  CLI::Option* m_opt = nullptr;
  CLI::Option* prob_opt = nullptr;
  CLI::Option* dim_min_opt = nullptr;
  CLI::Option* dim_max_opt = nullptr;
};

int run_gen(const GenOpts& o, std::ostream& out, std::ostream& err) {
  GenSpec spec;
  spec.n = o.n;
  spec.kind = parse_gen_kind(o.kind);
  if (o.m_opt->count() > 0) spec.m = o.m;
  if (o.prob_opt->count() > 0) spec.edge_prob = o.edge_prob;
  if (!spec.m && !spec.edge_prob) throw UsageError("gen needs --m or --edge-prob");
  spec.dim_min = o.dim_min_opt->count() > 0 ? o.dim_min : o.dim;
  spec.dim_max = o.dim_max_opt->count() > 0 ? o.dim_max : (o.dim_min_opt->count() > 0 ? spec.dim_min : o.dim);
  spec.seed = o.seed;
  const Hypergraph h = gen(spec);
  err << "config: "
      << json{{"command", "gen"}, {"n", spec.n}, {"kind", to_string(spec.kind)}, {"m", o.m_opt->count() ? json(o.m) : json(nullptr)},
              {"edge_prob", o.prob_opt->count() ? json(o.edge_prob) : json(nullptr)}, {"dim_min", spec.dim_min},
              {"dim_max", spec.dim_max}, {"seed", spec.seed}, {"edges_written", h.num_edges()}}
             .dump()
      << '\n';
  if (o.out_path.empty()) {
    write_hg(out, h);
  } else {
    write_hg_file(o.out_path, h);
  }
  return 0;
}

// ---- solve -----------------------------------------------------------------

struct SolveOpts {
  std::string algo;
  std::uint64_t seed = 0;
  std::string input;
  std::string trace_path;
  std::string out_path;
  double p = 0.0;
  std::size_t d_cap = 0;
  std::size_t max_rounds = 0;
  std::size_t retries = 20;
  std::string fail_policy = "abort";
  bool fixed_p = false;
  double alpha = 0.0;
  std::size_t stop_threshold = 0;
  std::size_t threads = 1;
  bool check_invariants = false;
  CLI::Option* p_opt = nullptr;
  CLI::Option* d_cap_opt = nullptr;
  CLI::Option* max_rounds_opt = nullptr;
  CLI::Option* alpha_opt = nullptr;
  CLI::Option* stop_opt = nullptr;
};

int run_solve(const SolveOpts& o, std::ostream& out, std::ostream& err) {
  const Hypergraph h = read_hg_file(o.input);
  json cfg = {{"command", "solve"}, {"algo", o.algo}, {"seed", o.seed}, {"input", o.input},
              {"n", h.num_vertices()}, {"m", h.num_edges()}, {"dimension", h.dimension()}, {"threads", o.threads}};
  json result = {{"mis", nullptr}, {"algo", o.algo}, {"seed", o.seed}, {"status", "ok"}};
  std::string trace;
  bool ok = true;

  if (o.algo == "greedy") {
    report_config(err, cfg, h.num_vertices(), h.num_edges());
    result["mis"] = ids_json(greedy_mis(h, VertexOrder::shuffled(h, o.seed)));
  } else if (o.algo == "bl") {
    BlConfig c;
    c.seed = o.seed;
    c.p_mode = o.fixed_p ? PMode::Fixed : PMode::Recompute;
    if (o.p_opt->count() > 0) c.p_override = o.p;
    if (o.max_rounds_opt->count() > 0) c.max_rounds = o.max_rounds;
    c.threads = o.threads;
    cfg["p_mode"] = o.fixed_p ? "fixed" : "recompute";
    cfg["p_override"] = c.p_override ? json(*c.p_override) : json(nullptr);
    cfg["max_rounds"] = c.max_rounds.value_or(default_bl_max_rounds(h.num_vertices()));
    report_config(err, cfg, h.num_vertices(), h.num_edges());
    const BlResult r = run_bl(h, c);
    result["mis"] = ids_json(r.mis);
    result["status"] = to_string(r.status);
    result["rounds_used"] = r.rounds.size();
    trace = trace_jsonl(r);
    ok = r.status == SolverStatus::Ok;
  } else {
    SblConfig c;
    c.seed = o.seed;
    if (o.alpha_opt->count() > 0) c.alpha_override = o.alpha;
    if (o.d_cap_opt->count() > 0) c.d_cap_override = o.d_cap;
    if (o.p_opt->count() > 0) c.p_override = o.p;
    if (o.stop_opt->count() > 0) c.stop_threshold_override = o.stop_threshold;
    if (o.max_rounds_opt->count() > 0) c.max_rounds = o.max_rounds;
    c.max_retries_per_round = o.retries;
    c.fail_policy = o.fail_policy == "abort" ? FailPolicy::Abort : FailPolicy::FallbackGreedy;
    c.check_invariants = o.check_invariants;
    c.threads = o.threads;
    const Hypergraph input = normalize(h);
    cfg["fail_policy"] = to_string(c.fail_policy);
    cfg["retries"] = c.max_retries_per_round;
    if (input.num_vertices() >= 2) cfg["params"] = to_json(derive_params(input.num_vertices(), input.num_edges(), c));
    report_config(err, cfg, h.num_vertices(), h.num_edges());
    const SblResult r = run_sbl(h, c);
    json body = result_json(r);
    result["mis"] = body["mis"];
    result["status"] = body["status"];
    for (const auto& [k, v] : body.items()) {
      if (k != "mis" && k != "status") result[k] = v;
    }
    trace = trace_jsonl(r);
    ok = r.status == SolverStatus::Ok;
  }

  if (!o.trace_path.empty()) write_text(o.trace_path, trace);
  const std::string doc = result.dump() + "\n";
  if (o.out_path.empty()) {
    out << doc;
  } else {
    write_text(o.out_path, doc);
  }
  if (!ok) err << "error: solver stopped at its round limit; result is partial\n";
  return ok ? 0 : 1;
}

// ---- verify ----------------------------------------------------------------

int run_verify(const std::string& hg_path, const std::string& mis_path, std::ostream& out, std::ostream& err) {
  const Hypergraph h = read_hg_file(hg_path);
  std::ifstream f(mis_path);
  if (!f) throw Error(Errc::Parse, "cannot open " + mis_path);
  json doc;
  try {
    doc = json::parse(f);
  } catch (const json::exception& e) {
    throw Error(Errc::Parse, mis_path + ": " + e.what());
  }
  if (!doc.contains("mis") || !doc["mis"].is_array()) throw Error(Errc::Parse, mis_path + ": missing \"mis\" array");
  std::vector<Vertex> ids;
  for (const auto& v : doc["mis"]) {
    if (!v.is_number_unsigned()) throw Error(Errc::Parse, mis_path + ": \"mis\" must hold positive integers");
    ids.push_back(v.get<Vertex>());
  }
  const VertexSet s = VertexSet::from_unsorted(std::move(ids));
  const bool independent = is_independent(h, s);
  const bool maximal = independent && is_maximal_independent(h, s);
  out << json{{"independent", independent}, {"maximal", maximal}, {"size", s.size()}}.dump() << '\n';
  if (!independent) err << "verify: set contains an edge\n";
  if (independent && !maximal) err << "verify: set is independent but not maximal\n";
  return maximal ? 0 : 1;
}

// ---- analyze ---------------------------------------------------------------

struct AnalyzeOpts {
  std::string input;
  std::string variant = "both";
  double delta = 0.0;
  double p = 0.0;
  double budget = 1e8;
  CLI::Option* delta_opt = nullptr;
  CLI::Option* p_opt = nullptr;
};

int run_analyze(const AnalyzeOpts& o, std::ostream& out, std::ostream& err) {
  const Hypergraph h = read_hg_file(o.input);
  const std::uint64_t work = degree_work(h);
  json cfg = {{"command", "analyze"}, {"input", o.input}, {"variant", o.variant}, {"budget", o.budget},
              {"subset_evaluations", work}};
  report_config(err, cfg, h.num_vertices(), h.num_edges());
  if (static_cast<double>(work) > o.budget) {
    err << "error: degree enumeration needs " << work << " subset evaluations, above the budget of " << num(o.budget)
        << "; raise --budget to proceed\n";
    return 1;
  }
  const DegreeProfile prof = degree_profile(h);
  const double p = o.p_opt->count() > 0 ? o.p : bl_probability(prof.dim, prof.delta);
  const std::optional<double> delta = o.delta_opt->count() > 0 ? std::optional<double>(o.delta) : std::nullopt;

  json doc;
  doc["n"] = h.num_vertices();
  doc["m"] = h.num_edges();
  doc["dimension"] = h.dimension();
  doc["degree_profile"] = to_json(prof);
  doc["bl_p"] = bl_probability(prof.dim, prof.delta);
  json potentials = json::object();
  for (auto v : {RecurrenceVariant::KelsenOriginal, RecurrenceVariant::ModifiedD2}) {
    if (o.variant != "both" && o.variant != to_string(v)) continue;
    potentials[std::string(to_string(v))] = to_json(potential_report(h, v));
  }
  doc["potential"] = potentials;
  doc["bounds"] = to_json(kelsen_constants(h, p, delta));
  json table = json::array();
  bool modified_holds = true;
  for (std::size_t d = 3; d <= 8; ++d) {
    for (auto v : {RecurrenceVariant::ModifiedD2, RecurrenceVariant::KelsenOriginal}) {
      for (const auto& row : f_inequality_check(d, v)) {
        json r = to_json(row);
        r["variant"] = to_string(v);
        if (v == RecurrenceVariant::ModifiedD2) modified_holds = modified_holds && row.holds;
        table.push_back(std::move(r));
      }
    }
  }
  doc["f_inequality"] = std::move(table);
  doc["f_inequality_modified_all_hold"] = modified_holds;
  out << doc.dump(2) << '\n';
  return 0;
}

// ---- experiment ------------------------------------------------------------

struct ExperimentOpts {
  std::string input;
  std::uint64_t seed = 0;
  std::uint64_t trials = 10000;
  std::size_t threads = 1;
  // NaN means "not given".
  double p = std::nan("");
  double threshold = std::nan("");
  double delta = std::nan("");
  std::string x;
  std::size_t j = 1;
  std::size_t k = 2;
};

constexpr const char* kCsvHeader = "experiment,params,trials,estimate,wilson_low,wilson_high,paper_bound";

void csv_row(std::ostream& out, const std::string& name, const std::string& params, const TailEstimate& est,
             const std::string& bound) {
  out << kCsvHeader << '\n'
      << name << ',' << params << ',' << est.trials << ',' << num(est.point_estimate) << ','
      << num(est.wilson_lower_99) << ',' << num(est.wilson_upper_99) << ',' << bound << '\n';
}

int run_experiment(const std::string& which, const ExperimentOpts& o, std::ostream& out, std::ostream& err) {
  const Hypergraph h = read_hg_file(o.input);
  std::optional<double> delta;
  if (!std::isnan(o.delta)) delta = o.delta;
  auto bl_p = [&] {
    const DegreeProfile prof = degree_profile(h);
    return bl_probability(prof.dim, prof.delta);
  };
  const double p = std::isnan(o.p) ? bl_p() : o.p;
  json cfg = {{"command", "experiment"}, {"experiment", which}, {"input", o.input}, {"seed", o.seed},
              {"trials", o.trials}, {"threads", o.threads}, {"p", p}};
  report_config(err, cfg, h.num_vertices(), h.num_edges());

  std::string params = "p=" + num(p);
  if (which == "tail" || which == "migration") {
    WeightedHypergraph wh = WeightedHypergraph::unit(h);
    if (which == "migration") {
      const VertexSet x = parse_ids(o.x);
      wh = migration_hypergraph(h, x, o.j, o.k);
      params += ";x=" + ids_text(x) + ";j=" + std::to_string(o.j) + ";k=" + std::to_string(o.k);
    }
    const double D = eval_D(wh, p);
    const BoundConstants bc = kelsen_constants(wh.base(), p, delta);
    const bool explicit_threshold = !std::isnan(o.threshold);
    const double threshold = explicit_threshold ? o.threshold : std::exp2(bc.log2_k_H) * D;
    const double bound = std::min(1.0, std::exp2(bc.log2_p_H));
    params += ";delta=" + num(bc.delta_param) + ";D=" + num(D) + ";threshold=" + num(threshold) +
              ";vacuous=" + (bound >= 1.0 ? "1" : "0");
    const TailEstimate est = tail_experiment(wh, p, threshold, o.trials, o.seed, o.threads);
    if (!explicit_threshold && bound >= 1.0) err << "note: tail bound is vacuous (p(H) >= 1)\n";
    csv_row(out, which, params, est, explicit_threshold ? "" : num(bound));
  } else if (which == "lemma1") {
    const VertexSet x = parse_ids(o.x);
    params += ";x=" + ids_text(x);
    csv_row(out, which, params, estimate_unmark_given_marked(h, x, p, o.trials, o.seed, o.threads), "0.5");
  } else {
    const VertexSet x = parse_ids(o.x);
    const NeighborhoodHit hit = estimate_neighborhood_hit(h, x, o.j, p, o.trials, o.seed, o.threads);
    params += ";x=" + ids_text(x) + ";j=" + std::to_string(o.j) + ";epsilon=" + num(hit.epsilon) + ";a=" + num(hit.a);
    csv_row(out, which, params, hit.estimate, num(hit.paper_bound));
  }
  return 0;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximal independent sets in hypergraphs", "hmis"};
  app.require_subcommand(1);

  GenOpts gen_o;
  auto* gen_cmd = app.add_subcommand("gen", "Write a random hypergraph in .hg format");
  gen_cmd->add_option("--n", gen_o.n, "Vertex count")->required();
  gen_cmd->add_option("--kind", gen_o.kind, "uniform-d | mixed-dims | linear")
      ->check(CLI::IsMember({"uniform-d", "mixed-dims", "linear"}));
  gen_o.m_opt = gen_cmd->add_option("--m", gen_o.m, "Edge count");
  gen_o.prob_opt = gen_cmd->add_option("--edge-prob", gen_o.edge_prob, "Independent inclusion probability per candidate");
  gen_cmd->add_option("--dim", gen_o.dim, "Edge size")->capture_default_str();
  gen_o.dim_min_opt = gen_cmd->add_option("--dim-min", gen_o.dim_min, "Smallest edge size");
  gen_o.dim_max_opt = gen_cmd->add_option("--dim-max", gen_o.dim_max, "Largest edge size");
  gen_cmd->add_option("--seed", gen_o.seed, "Random seed")->required();
  gen_cmd->add_option("--out", gen_o.out_path, "Output file (default stdout)");
  gen_o.m_opt->excludes(gen_o.prob_opt);

  SolveOpts solve_o;
  auto* solve_cmd = app.add_subcommand("solve", "Compute a maximal independent set");
  solve_cmd->add_option("--algo", solve_o.algo, "greedy | bl | sbl")
      ->required()
      ->check(CLI::IsMember({"greedy", "bl", "sbl"}));
  solve_cmd->add_option("--seed", solve_o.seed, "Random seed")->required();
  solve_cmd->add_option("--trace", solve_o.trace_path, "Write the per-round trace as JSON lines");
  solve_cmd->add_option("--out", solve_o.out_path, "Result file (default stdout)");
  solve_o.p_opt = solve_cmd->add_option("--p", solve_o.p, "Marking / sampling probability override");
  solve_o.d_cap_opt = solve_cmd->add_option("--d-cap", solve_o.d_cap, "SBL dimension cap");
  solve_o.max_rounds_opt = solve_cmd->add_option("--max-rounds", solve_o.max_rounds, "Round limit");
  solve_cmd->add_option("--retries", solve_o.retries, "SBL resamples per round")->capture_default_str();
  solve_cmd->add_option("--fail-policy", solve_o.fail_policy, "abort | fallback-greedy")
      ->check(CLI::IsMember({"abort", "fallback-greedy"}))
      ->capture_default_str();
  solve_cmd->add_flag("--fixed-p", solve_o.fixed_p, "BL: compute p once instead of every round");
  solve_o.alpha_opt = solve_cmd->add_option("--alpha", solve_o.alpha, "SBL alpha override");
  solve_o.stop_opt = solve_cmd->add_option("--stop-threshold", solve_o.stop_threshold, "SBL stop threshold override");
  solve_cmd->add_option("--threads", solve_o.threads, "Worker threads, 0 = all")->capture_default_str();
  solve_cmd->add_flag("--check-invariants", solve_o.check_invariants, "SBL: check independence every round");
  solve_cmd->add_option("input", solve_o.input, "Input .hg file")->required();

  std::string verify_hg;
  std::string verify_mis;
  auto* verify_cmd = app.add_subcommand("verify", "Check that a set is a maximal independent set");
  verify_cmd->add_option("input", verify_hg, "Input .hg file")->required();
  verify_cmd->add_option("mis", verify_mis, "MIS JSON file")->required();

  AnalyzeOpts an_o;
  auto* analyze_cmd = app.add_subcommand("analyze", "Degree profile, potentials and bound constants as JSON");
  analyze_cmd->add_option("input", an_o.input, "Input .hg file")->required();
  analyze_cmd->add_option("--variant", an_o.variant, "original | modified | both")
      ->check(CLI::IsMember({"original", "modified", "both"}))
      ->capture_default_str();
  an_o.delta_opt = analyze_cmd->add_option("--delta", an_o.delta, "Tail-bound delta (default (log2 n)^2)");
  an_o.p_opt = analyze_cmd->add_option("--p", an_o.p, "Probability for bound constants (default BL p)");
  analyze_cmd->add_option("--budget", an_o.budget, "Maximum subset evaluations")->capture_default_str();

  ExperimentOpts ex_o;
  std::string which;
  auto* exp_cmd = app.add_subcommand("experiment", "Monte Carlo experiments as CSV");
  exp_cmd->require_subcommand(1);
  for (const char* name : {"tail", "lemma1", "lemma2", "migration"}) {
    auto* sub = exp_cmd->add_subcommand(name);
    sub->add_option("input", ex_o.input, "Input .hg file")->required();
    sub->add_option("--seed", ex_o.seed, "Random seed")->required();
    sub->add_option("--trials", ex_o.trials, "Trial count")->capture_default_str();
    sub->add_option("--threads", ex_o.threads, "Worker threads, 0 = all")->capture_default_str();
    sub->add_option("--p", ex_o.p, "Marking probability (default BL p)");
    const std::string n = name;
    if (n == "tail") sub->add_option("--threshold", ex_o.threshold, "Threshold (default k(H) D)");
    if (n == "tail" || n == "migration") sub->add_option("--delta", ex_o.delta, "Tail-bound delta");
    if (n != "tail") sub->add_option("--x", ex_o.x, "Vertex set, e.g. 1,2")->required();
    if (n == "lemma2" || n == "migration") sub->add_option("--j", ex_o.j, "Neighborhood arity")->required();
    if (n == "migration") sub->add_option("--k", ex_o.k, "Source arity")->required();
    sub->callback([&which, n] { which = n; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (gen_cmd->parsed()) return run_gen(gen_o, out, err);
    if (solve_cmd->parsed()) return run_solve(solve_o, out, err);
    if (verify_cmd->parsed()) return run_verify(verify_hg, verify_mis, out, err);
    if (analyze_cmd->parsed()) return run_analyze(an_o, out, err);
    return run_experiment(which, ex_o, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace hmis

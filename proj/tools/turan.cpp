// turan: command-line front end for the workbench library.
//
// Verbs are grouped per module (tree, alg, entropy, lift, oracle, sunflower,
// suite). Generator verbs print one canonical JSON artifact; checking verbs
// print a structured report and drive the exit code. Exit codes: 0 every
// hard check passed, 1 a hard check failed or an internal invariant broke,
// 2 bad usage or bad parameters.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "turan/algebraic.hpp"
#include "turan/entropy.hpp"
#include "turan/errors.hpp"
#include "turan/hypergraph.hpp"
#include "turan/json_io.hpp"
#include "turan/lifting.hpp"
#include "turan/oracle.hpp"
#include "turan/report.hpp"
#include "turan/suite.hpp"
#include "turan/tree.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace turan;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParamError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// JSON-valued arguments accept either inline JSON or a path to a file.
std::string json_arg(const std::string& value) {
  if (!value.empty() && (value.front() == '{' || value.front() == '[')) return value;
  return slurp(value);
}

void write_out(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParamError("cannot write file: " + path);
  out << text << "\n";
}

// Embed an already-canonical JSON string as a subobject.
json embed(const std::string& canonical) { return json::parse(canonical); }

std::string fmt_ll(long long v) { return std::to_string(v); }
std::string fmt_u64(std::uint64_t v) { return std::to_string(v); }

std::string fmt_ids(const std::vector<VertexId>& ids) {
  std::string s = "[";
  for (size_t i = 0; i < ids.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(ids[i]);
  }
  return s + "]";
}

// Print (and optionally save) a report, emit plot data if requested, and
// turn the hard-check verdict into an exit code.
int finish_report(Report& r, const std::string& out, const std::string& plotdata,
                  bool include_timing, std::chrono::steady_clock::time_point t0) {
  r.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  write_out(report_to_json(r, include_timing), out);
  if (!plotdata.empty()) write_out(emit_plotdata(r), plotdata);
  return r.all_hard_pass() ? 0 : 1;
}

std::chrono::steady_clock::time_point now() { return std::chrono::steady_clock::now(); }

// ---------------------------------------------------------------- tree ----

int run_tree_build(int k, int a, int b, const std::string& out, std::string sidecar) {
  TreeParams p{k, a, b};
  p.validate();
  RootedTree T = build_tree(p);
  if (out.empty()) {
    write_out(hypergraph_to_json(T.graph), "");
    write_out(tree_sidecar_json(T), sidecar);
    return 0;
  }
  if (sidecar.empty()) {
    sidecar = out;
    const std::string suffix = ".json";
    if (sidecar.size() > suffix.size() &&
        sidecar.compare(sidecar.size() - suffix.size(), suffix.size(), suffix) == 0) {
      sidecar.resize(sidecar.size() - suffix.size());
    }
    sidecar += ".sidecar.json";
  }
  write_out(hypergraph_to_json(T.graph), out);
  write_out(tree_sidecar_json(T), sidecar);
  return 0;
}

int run_tree_check(int k, int a, int b, int limit, const std::string& out) {
  const auto t0 = now();
  TreeParams p{k, a, b};
  p.validate();
  RootedTree T = build_tree(p);
  BalanceResult res = check_balanced(T, limit);

  Report r;
  r.suite = "tree check-balanced";
  r.config_echo = json{{"k", k}, {"a", a}, {"b", b}, {"limit", limit}}.dump();
  CheckResult c;
  c.name = "balance";
  c.status = res.balanced ? CheckStatus::Pass : CheckStatus::Fail;
  c.detail = res.balanced
                 ? "eps(S)/|S| >= b/a over every nonempty white subset"
                 : "a white subset falls below the b/a threshold";
  c.values.emplace_back("threshold", std::to_string(b) + "/" + std::to_string(a));
  c.values.emplace_back("worst_subset", fmt_ids(res.worst_subset));
  c.values.emplace_back("worst_eps", fmt_ll(res.worst_eps));
  r.add(std::move(c));
  return finish_report(r, out, "", true, t0);
}

int run_tree_power(int k, int a, int b, int s, bool dedupe, int max_glued,
                   const std::string& out) {
  TreeParams p{k, a, b};
  p.validate();
  RootedTree T = build_tree(p);
  PowerOptions opts;
  opts.dedupe = dedupe;
  opts.max_glued = max_glued;
  std::vector<PowerMember> members = enumerate_power(T, s, opts);

  json doc;
  doc["k"] = k;
  doc["a"] = a;
  doc["b"] = b;
  doc["s"] = s;
  doc["dedupe"] = dedupe;
  doc["member_count"] = members.size();
  doc["members"] = json::array();
  for (const PowerMember& m : members) doc["members"].push_back(embed(power_member_to_json(m)));
  write_out(doc.dump(2), out);
  return 0;
}

// ----------------------------------------------------------------- alg ----

// Resolve the pattern for the rooted-copy verbs: a member document from
// `tree power` when given, otherwise the tree itself (which requires the
// parameters to be tree-valid, unlike the instance builder).
void resolve_pattern(int k, int a, int b, const std::string& h_arg, Hypergraph& pattern,
                     std::vector<VertexId>& roots) {
  if (!h_arg.empty()) {
    PowerMember m = power_member_from_json(json_arg(h_arg));
    pattern = std::move(m.graph);
    roots = std::move(m.roots);
    return;
  }
  TreeParams tp{k, a, b};
  try {
    tp.validate();
  } catch (const ParamError& e) {
    throw ParamError(std::string(e.what()) +
                     "; no default pattern exists, pass --H with a rooted member");
  }
  RootedTree T = build_tree(tp);
  pattern = std::move(T.graph);
  roots = std::move(T.roots);
}

int run_alg_build(int k, int a, int b, std::uint32_t q, std::uint64_t seed,
                  std::uint64_t tuple_limit, const std::string& out) {
  ConstructionParams cp = ConstructionParams::make(AlgParams{k, a, b}, q, seed);
  AlgebraicInstance inst = build_instance(cp, tuple_limit);
  write_out(instance_to_json(inst), out);
  return 0;
}

int run_alg_edge_stats(int k, int a, int b, const std::vector<std::uint32_t>& qs, int seeds,
                       std::uint64_t master, const std::string& out,
                       const std::string& plotdata) {
  const auto t0 = now();
  AlgParams alg{k, a, b};
  alg.validate();

  Report r;
  r.suite = "alg edge-stats";
  r.master_seed = master;
  r.config_echo =
      json{{"k", k}, {"a", a}, {"b", b}, {"q_list", qs}, {"seeds", seeds}, {"seed", master}}
          .dump();
  SweepSeries sweep;
  sweep.name = "edge-counts";
  sweep.columns = {"q",          "seeds",    "nonempty", "mean_edges", "mean_nonempty_edges",
                   "predicted",  "ratio"};
  for (std::uint32_t q : qs) {
    EdgeStatsRow row = edge_stats(alg, q, seeds, master);
    sweep.rows.push_back({fmt_u64(q), std::to_string(row.num_seeds),
                          std::to_string(row.nonempty), format_double(row.mean_edges),
                          format_double(row.mean_nonempty_edges), format_double(row.predicted),
                          format_double(row.ratio)});
  }
  r.sweeps.push_back(std::move(sweep));

  CheckResult c;
  c.name = "edge-count-trend";
  c.status = CheckStatus::ReportOnly;
  c.detail = "mean edge count against q^(bk-a); asymptotic comparison, informational";
  r.add(std::move(c));
  return finish_report(r, out, plotdata, true, t0);
}

int run_alg_lemma6(int k, int a, int b, std::uint32_t q, int seeds, int tuples,
                   std::uint64_t master, const std::string& h_arg, const std::string& out) {
  const auto t0 = now();
  AlgParams alg{k, a, b};
  alg.validate();
  Hypergraph pattern;
  std::vector<VertexId> roots;
  resolve_pattern(k, a, b, h_arg, pattern, roots);

  ExpectationReport er = rooted_copy_expectation(alg, pattern, roots, q, seeds, master, tuples);

  Report r;
  r.suite = "alg lemma6";
  r.master_seed = master;
  r.config_echo = json{{"k", k},         {"a", a},           {"b", b},      {"q", q},
                       {"seeds", seeds}, {"tuples", tuples}, {"seed", master}}
                      .dump();
  CheckResult c;
  c.name = "rooted-copy-mean";
  c.status = er.pass ? CheckStatus::Pass : CheckStatus::Fail;
  c.detail = "sample mean of rooted copy counts against q^(b(|H|-|R|)-a e(H))";
  c.values.emplace_back("seeds", std::to_string(er.num_seeds));
  c.values.emplace_back("tuples_per_seed", std::to_string(er.tuples_per_seed));
  c.values.emplace_back("mean", format_double(er.mean));
  c.values.emplace_back("std_error", format_double(er.std_error));
  c.values.emplace_back("prediction", format_double(er.prediction));
  c.values.emplace_back("exponent", fmt_ll(er.exponent));
  r.add(std::move(c));
  return finish_report(r, out, "", true, t0);
}

int run_alg_lemma5(int k, int a, int b, int p, const std::vector<std::uint32_t>& qs, int seeds,
                   int tuples, std::uint64_t master, const std::string& h_arg,
                   const std::string& out, const std::string& plotdata) {
  const auto t0 = now();
  AlgParams alg{k, a, b};
  alg.validate();
  Hypergraph pattern;
  std::vector<VertexId> roots;
  resolve_pattern(k, a, b, h_arg, pattern, roots);

  Report r;
  r.suite = "alg lemma5";
  r.master_seed = master;
  r.config_echo = json{{"k", k},           {"a", a},         {"b", b},       {"p", p},
                       {"q_list", qs},     {"seeds", seeds}, {"tuples", tuples},
                       {"seed", master}}
                      .dump();
  SweepSeries sweep;
  sweep.name = "copy-dichotomy";
  sweep.columns = {"q", "samples", "in_gap", "gap_fraction"};
  for (std::uint32_t q : qs) {
    DichotomyReport dr = copy_dichotomy(alg, pattern, roots, q, seeds, tuples, p, master);
    CheckResult c;
    c.name = "copy-count-dichotomy-q" + std::to_string(q);
    c.status = CheckStatus::ReportOnly;
    c.detail = "histogram of rooted copy counts; gap region is [p, q/2)";
    c.values.emplace_back("samples", fmt_ll(dr.samples));
    c.values.emplace_back("in_gap", fmt_ll(dr.in_gap));
    c.values.emplace_back("gap_fraction", format_double(dr.gap_fraction));
    for (const auto& [count, occurrences] : dr.histogram) {
      c.values.emplace_back("count_" + std::to_string(count), fmt_ll(occurrences));
    }
    r.add(std::move(c));
    sweep.rows.push_back({fmt_u64(q), fmt_ll(dr.samples), fmt_ll(dr.in_gap),
                          format_double(dr.gap_fraction)});
  }
  r.sweeps.push_back(std::move(sweep));
  return finish_report(r, out, plotdata, true, t0);
}

int run_alg_freeness(int k, int a, int b, std::uint32_t q, std::uint64_t seed, int p,
                     const std::string& inst_arg, std::uint64_t tuple_limit,
                     const std::string& out) {
  const auto t0 = now();
  TreeParams tp{k, a, b};
  tp.validate();
  RootedTree T = build_tree(tp);

  AlgebraicInstance inst =
      inst_arg.empty()
          ? build_instance(ConstructionParams::make(AlgParams{k, a, b}, q, seed), tuple_limit)
          : instance_from_json(json_arg(inst_arg));

  std::vector<Hypergraph> family;
  for (const PowerMember& m : enumerate_power(T, p)) {
    if (m.min_s == p) family.push_back(m.graph);
  }
  std::optional<ContainsWitness> hit = find_family_copy(inst, family);

  Report r;
  r.suite = "alg freeness";
  r.master_seed = inst.params.seed;
  r.config_echo = json{{"k", k},
                       {"a", a},
                       {"b", b},
                       {"q", inst.params.q},
                       {"seed", inst.params.seed},
                       {"p", p}}
                      .dump();
  CheckResult c;
  c.name = "power-freeness";
  c.status = hit ? CheckStatus::Fail : CheckStatus::Pass;
  c.detail = hit ? "the instance contains a power-family member"
                 : "no power-family member embeds into the instance";
  c.values.emplace_back("family_size", std::to_string(family.size()));
  c.values.emplace_back("instance_edges", std::to_string(inst.graph.n_edges()));
  if (hit) {
    c.values.emplace_back("member_index", std::to_string(hit->member));
    c.values.emplace_back("witness", fmt_ids(hit->map));
  }
  r.add(std::move(c));
  return finish_report(r, out, "", true, t0);
}

// ------------------------------------------------------------- entropy ----

// Entropy verbs take the pattern as a plain hypergraph and recover a
// construction order; the distributions are over unrestricted homomorphisms,
// so any part labels on the input are dropped.
Hypertree load_hypertree(const std::string& h_arg) {
  Hypergraph g = hypergraph_from_json(json_arg(h_arg));
  g.clear_partition();
  return derive_build_order(g);
}

HostProfile load_host(const std::string& x_arg) {
  return make_host_profile(hypergraph_from_json(json_arg(x_arg)));
}

int run_entropy_mu(const std::string& h_arg, const std::string& x_arg, int max_rows,
                   const std::string& out) {
  Hypertree H = load_hypertree(h_arg);
  HostProfile host = load_host(x_arg);
  WeightedHomTable table = build_mu(H, host);

  json doc;
  doc["pattern_vertices"] = table.pattern.n_vertices();
  doc["pattern_edges"] = table.pattern.n_edges();
  doc["n"] = table.n;
  doc["M"] = table.M;
  doc["r_eff"] = host.r_eff;
  doc["entropy"] = entropy_D(table);
  doc["support_size"] = table.support.size();
  const size_t cap = max_rows < 0 ? table.support.size() : static_cast<size_t>(max_rows);
  doc["truncated"] = table.support.size() > cap;
  doc["weights"] = json::array();
  for (size_t i = 0; i < table.support.size() && i < cap; ++i) {
    json row;
    row["map"] = table.support[i];
    row["weight"] = table.weights[i].str();
    row["weight_float"] = table.weights[i].convert_to<double>();
    doc["weights"].push_back(std::move(row));
  }
  write_out(doc.dump(2), out);
  return 0;
}

int run_entropy_verify(const std::string& h_arg, const std::string& x_arg,
                       const std::vector<int>& props, const std::string& out) {
  const auto t0 = now();
  for (int p : props) {
    if (p != 1 && p != 2) throw ParamError("--props entries must be 1 or 2");
  }
  Hypertree H = load_hypertree(h_arg);
  HostProfile host = load_host(x_arg);
  WeightedHomTable table = build_mu(H, host);

  Report r;
  r.suite = "entropy verify";
  r.config_echo = json{{"props", props},
                       {"pattern_edges", H.graph.n_edges()},
                       {"host_vertices", host.n},
                       {"host_edges", host.X.n_edges()}}
                      .dump();
  for (int p : props) {
    if (p == 1) {
      Property1Report p1 = verify_property1(table, host);
      CheckResult c;
      c.name = "distribution-entropy";
      c.status = p1.pass ? CheckStatus::Pass : CheckStatus::Fail;
      c.detail = "D(mu) stays within e(H) ln(n^k/M) of the uniform maximum";
      c.values.emplace_back("d_mu", format_double(p1.d_mu));
      c.values.emplace_back("d_eps", format_double(p1.d_eps));
      c.values.emplace_back("e_H", fmt_ll(p1.e_H));
      c.values.emplace_back("slack", format_double(p1.slack));
      r.add(std::move(c));
    } else {
      Property2Report p2 = verify_table_marginals(table, host);
      CheckResult c;
      c.name = "edge-marginals";
      c.status = p2.pass ? CheckStatus::Pass : CheckStatus::Fail;
      c.detail = "every adjacent (k-1)-tuple marginal equals deg(T)/M exactly";
      c.values.emplace_back("pairs_checked", fmt_ll(p2.pairs_checked));
      c.values.emplace_back("worst_deviation", format_double(p2.worst_deviation));
      if (!p2.pass) {
        c.values.emplace_back("worst_S", fmt_ids(p2.worst_S));
        c.values.emplace_back("worst_T", fmt_ids(p2.worst_T));
      }
      r.add(std::move(c));
    }
  }
  return finish_report(r, out, "", true, t0);
}

int run_entropy_sidorenko(const std::string& h_arg, const std::string& x_arg,
                          const std::string& out) {
  const auto t0 = now();
  Hypertree H = load_hypertree(h_arg);
  HostProfile host = load_host(x_arg);
  SidorenkoReport sr = sidorenko_check(H, host);

  Report r;
  r.suite = "entropy sidorenko";
  r.config_echo = json{{"pattern_vertices", H.graph.n_vertices()},
                       {"pattern_edges", H.graph.n_edges()},
                       {"host_vertices", host.n},
                       {"host_edges", host.X.n_edges()}}
                      .dump();
  CheckResult c;
  c.name = "hom-count-bound";
  c.status = sr.pass ? CheckStatus::Pass : CheckStatus::Fail;
  c.detail = "|Hom(H,X)| >= n^|H| (M/n^k)^e(H), compared in exact integers";
  c.values.emplace_back("hom_count", fmt_u64(sr.hom_count));
  c.values.emplace_back("bound", format_double(sr.bound));
  c.values.emplace_back("lhs_scaled", sr.lhs_scaled.str());
  c.values.emplace_back("rhs_scaled", sr.rhs_scaled.str());
  r.add(std::move(c));
  return finish_report(r, out, "", true, t0);
}

int run_entropy_inj_bound(const std::string& h_arg, const std::string& x_arg,
                          const std::string& out) {
  const auto t0 = now();
  Hypertree H = load_hypertree(h_arg);
  HostProfile host = load_host(x_arg);
  NoninjReport nr = noninjective_mass(H, host);

  Report r;
  r.suite = "entropy inj-bound";
  r.config_echo = json{{"pattern_vertices", H.graph.n_vertices()},
                       {"pattern_edges", H.graph.n_edges()},
                       {"host_vertices", host.n},
                       {"host_edges", host.X.n_edges()}}
                      .dump();
  CheckResult c;
  c.name = "self-intersection-mass";
  const bool consequent_ok = !nr.consequent_applicable || nr.consequent_pass;
  c.status = (nr.pass && consequent_ok) ? CheckStatus::Pass : CheckStatus::Fail;
  c.detail = "lambda-mass of non-injective maps vs the pairwise-collision bound";
  c.values.emplace_back("mass", nr.mass.str());
  c.values.emplace_back("mass_float", format_double(nr.mass.convert_to<double>()));
  c.values.emplace_back("bound", nr.bound.str());
  c.values.emplace_back("bound_float", format_double(nr.bound.convert_to<double>()));
  c.values.emplace_back("inj_count", fmt_u64(nr.inj_count));
  c.values.emplace_back("inj_lower", nr.inj_lower.str());
  c.values.emplace_back("inj_lower_float", format_double(nr.inj_lower.convert_to<double>()));
  c.values.emplace_back("consequent_applicable", nr.consequent_applicable ? "true" : "false");
  if (nr.consequent_applicable) {
    c.values.emplace_back("consequent_pass", nr.consequent_pass ? "true" : "false");
  }
  r.add(std::move(c));
  return finish_report(r, out, "", true, t0);
}

int run_entropy_find_power(const std::string& x_arg, int k, int a, int b, int p,
                           const std::string& out) {
  TreeParams tp{k, a, b};
  tp.validate();
  Hypergraph X = hypergraph_from_json(json_arg(x_arg));
  PowerCopyResult res = find_power_copy(X, tp, p);

  json doc;
  doc["k"] = k;
  doc["a"] = a;
  doc["b"] = b;
  doc["p"] = p;
  doc["p_prime"] = res.p_prime;
  doc["groups"] = res.groups;
  doc["best_group"] = res.best_group;
  doc["threshold_edges"] = res.threshold_edges;
  doc["found"] = res.witness.has_value();
  if (res.witness) {
    doc["witness"] = embed(power_member_to_json(*res.witness));
    doc["witness_roots"] = res.witness_roots;
  } else {
    doc["witness"] = nullptr;
  }
  write_out(doc.dump(2), out);
  return 0;
}

// -------------------------------------------------- lift / oracle / sun ----

int run_lift_build(const std::string& family_arg, int k, const std::string& out) {
  std::vector<Hypergraph> base = family_from_json(json_arg(family_arg));
  if (base.empty()) throw ParamError("family has no members");
  LiftedFamilySpec spec{k, base.front().k(), base};
  spec.validate();
  std::vector<Hypergraph> lifted;
  lifted.reserve(base.size());
  for (const Hypergraph& f : base) lifted.push_back(lift_member(f, k));
  write_out(family_to_json(lifted), out);
  return 0;
}

int run_lift_verify(const std::string& family_arg, int k, int l, int n_min, int n_max,
                    std::uint64_t budget, const std::string& out,
                    const std::string& plotdata) {
  const auto t0 = now();
  LiftedFamilySpec spec{k, l, family_from_json(json_arg(family_arg))};
  spec.validate();
  ExOptions opts;
  opts.node_budget = budget;
  std::vector<LiftIdentityRow> rows = lifting_identity_table(spec, n_min, n_max, opts);

  Report r;
  r.suite = "lift verify-lemma9";
  r.config_echo = json{{"k", k},
                       {"l", l},
                       {"n_min", n_min},
                       {"n_max", n_max},
                       {"members", spec.base.size()},
                       {"budget", budget}}
                      .dump();
  SweepSeries sweep;
  sweep.name = "lift-identity";
  sweep.columns = {"n_base", "ex_base", "ex_lifted", "equal"};
  bool all_equal = true;
  int first_bad = -1;
  for (const LiftIdentityRow& row : rows) {
    if (!row.equal && all_equal) first_bad = row.n_base;
    all_equal = all_equal && row.equal;
    sweep.rows.push_back({std::to_string(row.n_base), fmt_ll(row.ex_base),
                          fmt_ll(row.ex_lifted), row.equal ? "1" : "0"});
  }
  r.sweeps.push_back(std::move(sweep));

  CheckResult c;
  c.name = "lift-identity";
  c.status = all_equal ? CheckStatus::Pass : CheckStatus::Fail;
  c.detail = "ex(n, base) == ex(n+k-l, lifted) on every tested n";
  c.values.emplace_back("rows", std::to_string(rows.size()));
  if (!all_equal) c.values.emplace_back("first_unequal_n", std::to_string(first_bad));
  r.add(std::move(c));
  return finish_report(r, out, plotdata, true, t0);
}

int run_oracle_ex(int n, int k, const std::string& family_arg, std::uint64_t budget,
                  const std::string& out) {
  std::vector<Hypergraph> family = family_from_json(json_arg(family_arg));
  ExOptions opts;
  opts.node_budget = budget;
  ExResult res = exact_ex(n, k, family, opts);

  json doc;
  doc["n"] = n;
  doc["k"] = k;
  doc["value"] = res.value;
  doc["nodes"] = res.nodes;
  doc["exhaustive"] = res.exhaustive;
  doc["witness"] = embed(hypergraph_to_json(res.witness));
  write_out(doc.dump(2), out);
  return 0;
}

int run_sunflower(int k, int t, int n, const std::string& out) {
  write_out(hypergraph_to_json(build_sunflower(k, t, n)), out);
  return 0;
}

// --------------------------------------------------------------- suite ----

int run_suite_cmd(const std::string& name, const SuiteConfig& cfg, const std::string& out,
                  const std::string& plotdata, bool no_timing) {
  Report r = run_suite(name, cfg);
  write_out(report_to_json(r, !no_timing), out);
  if (!plotdata.empty()) write_out(emit_plotdata(r), plotdata);
  return r.all_hard_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for balanced hypertrees, random algebraic constructions, "
               "entropy counting bounds, family lifting and exact Turan numbers"};
  app.require_subcommand(1);
  app.footer("Set TURAN_THREADS to cap worker threads (default: hardware concurrency).\n"
             "JSON-valued options accept a file path or inline JSON.");

  int rc = 0;

  // tree ------------------------------------------------------------------
  auto* tree = app.add_subcommand("tree", "balanced rooted hypertrees and their powers");
  tree->require_subcommand(1);
  {
    static int k, a, b;
    static std::string out, sidecar;
    auto* c = tree->add_subcommand("build", "construct the tree, emit graph + sidecar");
    c->add_option("--k", k, "uniformity")->required();
    c->add_option("--a", a, "number of non-root (white) vertices")->required();
    c->add_option("--b", b, "number of edges")->required();
    c->add_option("--out", out, "write the graph here (sidecar lands next to it)");
    c->add_option("--sidecar", sidecar, "explicit sidecar path");
    c->callback([&] { rc = run_tree_build(k, a, b, out, sidecar); });
  }
  {
    static int k, a, b, limit = 20;
    static std::string out;
    auto* c = tree->add_subcommand("check-balanced", "exhaustive balancedness audit");
    c->add_option("--k", k, "uniformity")->required();
    c->add_option("--a", a, "number of white vertices")->required();
    c->add_option("--b", b, "number of edges")->required();
    c->add_option("--limit", limit, "max a for the 2^a subset scan");
    c->add_option("--out", out, "report path (default stdout)");
    c->callback([&] { rc = run_tree_check(k, a, b, limit, out); });
  }
  {
    static int k, a, b, s, max_glued = 12;
    static bool dedupe = true;
    static std::string out;
    auto* c = tree->add_subcommand("power", "enumerate unions of s root-sharing copies");
    c->add_option("--k", k, "uniformity")->required();
    c->add_option("--a", a, "number of white vertices")->required();
    c->add_option("--b", b, "number of edges")->required();
    c->add_option("--s", s, "number of glued copies")->required();
    c->add_flag("--dedupe,!--no-dedupe", dedupe, "collapse isomorphic members (default on)");
    c->add_option("--max-glued", max_glued, "cap on s*a");
    c->add_option("--out", out, "member list path (default stdout)");
    c->callback([&] { rc = run_tree_power(k, a, b, s, dedupe, max_glued, out); });
  }

  // alg -------------------------------------------------------------------
  auto* alg = app.add_subcommand("alg", "random algebraic instances over F_q");
  alg->require_subcommand(1);
  {
    static int k, a, b;
    static std::uint32_t q;
    static std::uint64_t seed = 7, tuple_limit = 10'000'000;
    static std::string out;
    auto* c = alg->add_subcommand("build", "sample an instance and emit it");
    c->add_option("--k", k, "uniformity")->required();
    c->add_option("--a", a, "number of vanishing polynomials")->required();
    c->add_option("--b", b, "coordinate blocks per part")->required();
    c->add_option("--q", q, "field size (prime)")->required();
    c->add_option("--seed", seed, "master seed");
    c->add_option("--tuple-limit", tuple_limit, "refuse hosts with more transversals");
    c->add_option("--out", out, "instance path (default stdout)");
    c->callback([&] { rc = run_alg_build(k, a, b, q, seed, tuple_limit, out); });
  }
  {
    static int k, a, b, seeds = 100;
    static std::vector<std::uint32_t> qs;
    static std::uint64_t master = 7;
    static std::string out, plotdata;
    auto* c = alg->add_subcommand("edge-stats", "edge-count sweep across field sizes");
    c->add_option("--k", k, "uniformity")->required();
    c->add_option("--a", a, "number of vanishing polynomials")->required();
    c->add_option("--b", b, "coordinate blocks per part")->required();
    c->add_option("--q-list", qs, "comma-separated primes")->required()->delimiter(',');
    c->add_option("--seeds", seeds, "instances per field size");
    c->add_option("--seed", master, "master seed");
    c->add_option("--out", out, "report path (default stdout)");
    c->add_option("--plotdata", plotdata, "also write tab-separated sweep data here");
    c->callback([&] { rc = run_alg_edge_stats(k, a, b, qs, seeds, master, out, plotdata); });
  }
  {
    static int k, a, b, seeds = 200, tuples = 1;
    static std::uint32_t q;
    static std::uint64_t master = 7;
    static std::string h_arg, out;
    auto* c = alg->add_subcommand("lemma6", "rooted-copy expectation vs prediction");
    c->add_option("--k", k, "uniformity")->required();
    c->add_option("--a", a, "number of vanishing polynomials")->required();
    c->add_option("--b", b, "coordinate blocks per part")->required();
    c->add_option("--q", q, "field size (prime)")->required();
    c->add_option("--seeds", seeds, "Monte Carlo trials");
    c->add_option("--tuples", tuples, "root tuples averaged per trial instance");
    c->add_option("--seed", master, "master seed");
    c->add_option("--H", h_arg, "rooted pattern (member document from `tree power`); "
                                "defaults to the tree itself");
    c->add_option("--out", out, "report path (default stdout)");
    c->callback([&] { rc = run_alg_lemma6(k, a, b, q, seeds, tuples, master, h_arg, out); });
  }
  {
    static int k, a, b, p = 3, seeds = 40, tuples = 25;
    static std::vector<std::uint32_t> qs;
    static std::uint64_t master = 7;
    static std::string h_arg, out, plotdata;
    auto* c = alg->add_subcommand("lemma5", "copy-count dichotomy histogram (report only)");
    c->add_option("--k", k, "uniformity")->required();
    c->add_option("--a", a, "number of vanishing polynomials")->required();
    c->add_option("--b", b, "coordinate blocks per part")->required();
    c->add_option("--p", p, "configured gap threshold");
    c->add_option("--q-list", qs, "comma-separated primes")->required()->delimiter(',');
    c->add_option("--seeds", seeds, "instances per field size");
    c->add_option("--tuples", tuples, "root tuples sampled per instance");
    c->add_option("--seed", master, "master seed");
    c->add_option("--H", h_arg, "rooted pattern; defaults to the tree itself");
    c->add_option("--out", out, "report path (default stdout)");
    c->add_option("--plotdata", plotdata, "also write tab-separated sweep data here");
    c->callback(
        [&] { rc = run_alg_lemma5(k, a, b, p, qs, seeds, tuples, master, h_arg, out, plotdata); });
  }
  {
    static int k, a, b, p = 2;
    static std::uint32_t q = 3;
    static std::uint64_t seed = 7, tuple_limit = 10'000'000;
    static std::string inst_arg, out;
    auto* c = alg->add_subcommand("freeness", "exact search for a power-family member");
    c->add_option("--k", k, "uniformity")->required();
    c->add_option("--a", a, "number of vanishing polynomials")->required();
    c->add_option("--b", b, "coordinate blocks per part")->required();
    c->add_option("--p", p, "power level of the forbidden family");
    c->add_option("--q", q, "field size (prime), ignored with --instance");
    c->add_option("--seed", seed, "master seed, ignored with --instance");
    c->add_option("--instance", inst_arg, "probe a serialized instance instead of sampling");
    c->add_option("--tuple-limit", tuple_limit, "refuse hosts with more transversals");
    c->add_option("--out", out, "report path (default stdout)");
    c->callback([&] { rc = run_alg_freeness(k, a, b, q, seed, p, inst_arg, tuple_limit, out); });
  }

  // entropy ---------------------------------------------------------------
  auto* ent = app.add_subcommand("entropy", "homomorphism distributions and counting bounds");
  ent->require_subcommand(1);
  {
    static std::string h_arg, x_arg, out;
    static int max_rows = 1000;
    auto* c = ent->add_subcommand("mu", "edge-incremental distribution table");
    c->add_option("--H", h_arg, "hypertree pattern (hypergraph JSON)")->required();
    c->add_option("--X", x_arg, "host (hypergraph JSON)")->required();
    c->add_option("--max-rows", max_rows, "weight rows to embed; -1 for all");
    c->add_option("--out", out, "table path (default stdout)");
    c->callback([&] { rc = run_entropy_mu(h_arg, x_arg, max_rows, out); });
  }
  {
    static std::string h_arg, x_arg, out;
    static std::vector<int> props = {1, 2};
    auto* c = ent->add_subcommand("verify", "entropy and marginal properties of mu");
    c->add_option("--H", h_arg, "hypertree pattern (hypergraph JSON)")->required();
    c->add_option("--X", x_arg, "host (hypergraph JSON)")->required();
    c->add_option("--props", props, "which properties to check (1,2)")->delimiter(',');
    c->add_option("--out", out, "report path (default stdout)");
    c->callback([&] { rc = run_entropy_verify(h_arg, x_arg, props, out); });
  }
  {
    static std::string h_arg, x_arg, out;
    auto* c = ent->add_subcommand("sidorenko", "homomorphism count lower bound");
    c->add_option("--H", h_arg, "hypertree pattern (hypergraph JSON)")->required();
    c->add_option("--X", x_arg, "host (hypergraph JSON)")->required();
    c->add_option("--out", out, "report path (default stdout)");
    c->callback([&] { rc = run_entropy_sidorenko(h_arg, x_arg, out); });
  }
  {
    static std::string h_arg, x_arg, out;
    auto* c = ent->add_subcommand("inj-bound", "non-injective mass bound and its consequent");
    c->add_option("--H", h_arg, "hypertree pattern (hypergraph JSON)")->required();
    c->add_option("--X", x_arg, "host (hypergraph JSON)")->required();
    c->add_option("--out", out, "report path (default stdout)");
    c->callback([&] { rc = run_entropy_inj_bound(h_arg, x_arg, out); });
  }
  {
    static std::string x_arg, out;
    static int k, a, b, p = 2;
    auto* c = ent->add_subcommand("find-power", "popular-root extraction of a power member");
    c->add_option("--X", x_arg, "host (hypergraph JSON)")->required();
    c->add_option("--k", k, "tree uniformity")->required();
    c->add_option("--a", a, "tree white count")->required();
    c->add_option("--b", b, "tree edge count")->required();
    c->add_option("--p", p, "power level to extract");
    c->add_option("--out", out, "result path (default stdout)");
    c->callback([&] { rc = run_entropy_find_power(x_arg, k, a, b, p, out); });
  }

  // lift / oracle / sunflower ---------------------------------------------
  auto* lift = app.add_subcommand("lift", "l-to-k family lifting");
  lift->require_subcommand(1);
  {
    static std::string family_arg, out;
    static int k;
    auto* c = lift->add_subcommand("build", "append shared apexes to every member");
    c->add_option("--family", family_arg, "base family (family JSON)")->required();
    c->add_option("--k", k, "target uniformity")->required();
    c->add_option("--out", out, "lifted family path (default stdout)");
    c->callback([&] { rc = run_lift_build(family_arg, k, out); });
  }
  {
    static std::string family_arg, out, plotdata;
    static int k, l, n_min, n_max;
    static std::uint64_t budget = 100'000'000;
    auto* c = lift->add_subcommand("verify-lemma9", "extremal-number identity across the lift");
    c->add_option("--family", family_arg, "base family (family JSON)")->required();
    c->add_option("--k", k, "target uniformity")->required();
    c->add_option("--l", l, "base uniformity")->required();
    c->add_option("--n-min", n_min, "smallest base vertex count")->required();
    c->add_option("--n-max", n_max, "largest base vertex count")->required();
    c->add_option("--budget", budget, "oracle node budget");
    c->add_option("--out", out, "report path (default stdout)");
    c->add_option("--plotdata", plotdata, "also write tab-separated sweep data here");
    c->callback(
        [&] { rc = run_lift_verify(family_arg, k, l, n_min, n_max, budget, out, plotdata); });
  }
  {
    auto* oracle = app.add_subcommand("oracle", "exact extremal numbers by branch and bound");
    oracle->require_subcommand(1);
    static std::string family_arg, out;
    static int n, k;
    static std::uint64_t budget = 100'000'000;
    auto* c = oracle->add_subcommand("ex", "maximum edges of a family-free hypergraph");
    c->add_option("--n", n, "vertex count")->required();
    c->add_option("--k", k, "uniformity")->required();
    c->add_option("--family", family_arg, "forbidden family (family JSON)")->required();
    c->add_option("--budget", budget, "node budget before giving up with a bracket");
    c->add_option("--out", out, "result path (default stdout)");
    c->callback([&] { rc = run_oracle_ex(n, k, family_arg, budget, out); });
  }
  {
    auto* sun = app.add_subcommand("sunflower", "kernel-plus-petals hypergraphs");
    sun->require_subcommand(1);
    static int k, t, n;
    static std::string out;
    auto* c = sun->add_subcommand("build", "kernel {0..t-1} with disjoint petals");
    c->add_option("--k", k, "uniformity")->required();
    c->add_option("--t", t, "kernel size")->required();
    c->add_option("--n", n, "vertex budget")->required();
    c->add_option("--out", out, "graph path (default stdout)");
    c->callback([&] { rc = run_sunflower(k, t, n, out); });
  }

  // suite -------------------------------------------------------------------
  auto* suite = app.add_subcommand("suite", "reproducible acceptance batteries");
  suite->require_subcommand(1);
  {
    auto* c = suite->add_subcommand("list", "print the suite names");
    c->callback([&] {
      for (const std::string& n : suite_names()) std::cout << n << "\n";
      rc = 0;
    });
  }
  {
    static std::string name, config_arg, out, plotdata;
    static bool no_timing = false;
    static std::uint64_t seed;
    static int mc_seeds, mc_seeds_heavy, mc_tuples_heavy, nonempty_seeds;
    static int dichotomy_seeds, dichotomy_tuples;
    static int p_config, entropy_hosts, host_n_max, sweep_seeds;
    static long long oracle_budget;
    static std::vector<std::uint32_t> mc_qs, sweep_qs;
    auto* c = suite->add_subcommand("run", "run one battery and report");
    c->add_option("name", name, "tree | algebraic | entropy | lifting")->required();
    c->add_option("--config", config_arg, "suite config (JSON file or inline); "
                                          "flags below override its fields");
    c->add_option("--seed", seed, "master seed");
    c->add_option("--mc-seeds", mc_seeds, "trials per light Monte Carlo cell");
    c->add_option("--mc-seeds-heavy", mc_seeds_heavy, "trials per heavy cell");
    c->add_option("--mc-tuples-heavy", mc_tuples_heavy, "root tuples per heavy-cell instance");
    c->add_option("--nonempty-seeds", nonempty_seeds, "trials for the nonempty-rate check");
    c->add_option("--dichotomy-seeds", dichotomy_seeds, "instances per dichotomy point");
    c->add_option("--dichotomy-tuples", dichotomy_tuples, "root tuples per instance");
    c->add_option("--p", p_config, "configured dichotomy threshold");
    c->add_option("--entropy-hosts", entropy_hosts, "random hosts per entropy pattern");
    c->add_option("--host-n-max", host_n_max, "largest random host");
    c->add_option("--oracle-budget", oracle_budget, "node budget for oracle-backed checks");
    c->add_option("--mc-qs", mc_qs, "field sizes for the Monte Carlo cells")->delimiter(',');
    c->add_option("--sweep-qs", sweep_qs, "field sizes for the edge-count sweep")
        ->delimiter(',');
    c->add_option("--sweep-seeds", sweep_seeds, "instances per sweep point");
    c->add_option("--out", out, "report path (default stdout)");
    c->add_option("--plotdata", plotdata, "also write tab-separated sweep data here");
    c->add_flag("--no-timing", no_timing, "omit elapsed time for byte-stable output");
    c->callback([&, c] {
      SuiteConfig cfg;
      if (!config_arg.empty()) cfg = suite_config_from_json(json_arg(config_arg));
      if (c->count("--seed")) cfg.master_seed = seed;
      if (c->count("--mc-seeds")) cfg.mc_seeds = mc_seeds;
      if (c->count("--mc-seeds-heavy")) cfg.mc_seeds_heavy = mc_seeds_heavy;
      if (c->count("--mc-tuples-heavy")) cfg.mc_tuples_heavy = mc_tuples_heavy;
      if (c->count("--nonempty-seeds")) cfg.nonempty_seeds = nonempty_seeds;
      if (c->count("--dichotomy-seeds")) cfg.dichotomy_seeds = dichotomy_seeds;
      if (c->count("--dichotomy-tuples")) cfg.dichotomy_tuples = dichotomy_tuples;
      if (c->count("--p")) cfg.p_config = p_config;
      if (c->count("--entropy-hosts")) cfg.entropy_hosts = entropy_hosts;
      if (c->count("--host-n-max")) cfg.host_n_max = host_n_max;
      if (c->count("--oracle-budget")) cfg.oracle_budget = oracle_budget;
      if (c->count("--mc-qs")) cfg.mc_qs = mc_qs;
      if (c->count("--sweep-qs")) cfg.sweep_qs = sweep_qs;
      if (c->count("--sweep-seeds")) cfg.sweep_seeds = sweep_seeds;
      rc = run_suite_cmd(name, cfg, out, plotdata, no_timing);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ParamError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const LimitError& e) {
    std::cerr << "error: " << e.what() << " (limit " << e.limit() << ", got " << e.actual()
              << ")\n";
    return 2;
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "; proved bracket [" << e.lower_bound() << ", "
              << e.upper_bound() << "]\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}

#include "turan/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include <nlohmann/json.hpp>

#include "turan/algebraic.hpp"
#include "turan/entropy.hpp"
#include "turan/errors.hpp"
#include "turan/json_io.hpp"
#include "turan/lifting.hpp"
#include "turan/oracle.hpp"
#include "turan/rng.hpp"
#include "turan/tree.hpp"

namespace turan {

namespace {

using json = nlohmann::ordered_json;

std::string fmt(double x) { return format_double(x); }
std::string fmt(long long x) { return std::to_string(x); }
std::string fmt(std::uint64_t x) { return std::to_string(x); }
std::string fmt(int x) { return std::to_string(x); }

std::string triple(int k, int a, int b) {
  return "(" + std::to_string(k) + "," + std::to_string(a) + "," + std::to_string(b) + ")";
}

CheckStatus pass_fail(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

// Derives a fresh sub-experiment seed; `stream` must be unique per
// experiment inside one battery so their trial streams never overlap.
std::uint64_t sub_seed(const SuiteConfig& cfg, std::uint64_t stream) {
  return trial_rng(cfg.master_seed, stream, 0).next_u64();
}

Hypergraph p3_path() {
  Hypergraph g(2, 4);
  g.add_edge({0, 1});
  g.add_edge({1, 2});
  g.add_edge({2, 3});
  return g;
}

Hypergraph single_edge_graph(int k) {
  Hypergraph g(k, k);
  Edge e(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) e[static_cast<size_t>(i)] = i;
  g.add_edge(std::move(e));
  return g;
}

// The tree itself plus every deduplicated two-copy gluing, as pinned-root
// counting patterns.
std::vector<RootedPattern> desk_patterns(const RootedTree& T) {
  std::vector<RootedPattern> out;
  for (const PowerMember& m : enumerate_power(T, 2)) {
    out.push_back(RootedPattern{"s" + std::to_string(m.min_s) + "." + std::to_string(out.size()),
                                m.graph, m.roots});
  }
  return out;
}

// n uniform in [k, n_max], then a uniform density and an independent coin
// per k-subset; a host that comes out edgeless gets one uniform edge so the
// edge distribution exists.
Hypergraph random_host(int k, int n_max, Rng& rng) {
  const int n = k + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n_max - k + 1)));
  const double density = rng.uniform01();
  Hypergraph X(k, n);

  std::vector<VertexId> pick(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<size_t>(i)] = i;
  while (true) {
    if (rng.uniform01() < density) X.add_edge(Edge(pick.begin(), pick.end()));
    int pos = k - 1;
    while (pos >= 0 && pick[static_cast<size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) break;
    ++pick[static_cast<size_t>(pos)];
    for (int j = pos + 1; j < k; ++j) {
      pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
    }
  }
  if (X.n_edges() == 0) {
    std::set<VertexId> e;
    while (static_cast<int>(e.size()) < k) {
      e.insert(static_cast<VertexId>(rng.uniform_below(static_cast<std::uint64_t>(n))));
    }
    X.add_edge(Edge(e.begin(), e.end()));
  }
  return X;
}

Report tree_suite(const SuiteConfig& cfg) {
  Report r;
  r.suite = "tree";

  {
    CheckResult c;
    c.name = "tree-grid";
    long long cases = 0;
    long long failures = 0;
    std::string first_bad;
    for (int k = 2; k <= 4; ++k) {
      for (int a = k - 1; a <= k + 3; ++a) {
        for (int b = std::max(a + 1, a - k + 3); b <= a + 6; ++b) {
          ++cases;
          const RootedTree T = build_tree(TreeParams{k, a, b});
          const bool shape =
              T.graph.n_edges() == b && T.graph.n_vertices() == b + k - 1;
          if (!(shape && check_balanced(T).balanced)) {
            ++failures;
            if (first_bad.empty()) first_bad = triple(k, a, b);
          }
        }
      }
    }
    c.status = pass_fail(failures == 0);
    c.detail = failures == 0
                   ? "every tree in the grid has b edges, b+k-1 vertices, and is balanced"
                   : "first failing triple " + first_bad;
    c.values = {{"cases", fmt(cases)}, {"failures", fmt(failures)}};
    r.add(std::move(c));
  }

  {
    CheckResult bound;
    bound.name = "power-edge-bound";
    CheckResult indep;
    indep.name = "power-order-independence";
    SweepSeries sizes;
    sizes.name = "power-sizes";
    sizes.columns = {"k", "a", "b", "s", "members"};

    long long cases = 0;
    long long bound_failures = 0;
    long long duplicate_failures = 0;
    bool indep_ok = true;
    for (const TreeParams tp : {TreeParams{2, 1, 2}, TreeParams{2, 2, 3}, TreeParams{3, 2, 3}}) {
      const RootedTree T = build_tree(tp);
      for (int s = 1; s <= 3; ++s) {
        const std::vector<PowerMember> members = enumerate_power(T, s);
        sizes.rows.push_back({fmt(tp.k), fmt(tp.a), fmt(tp.b), fmt(s),
                              fmt(static_cast<long long>(members.size()))});
        // Member identity is root-pinned: gluings that coincide only after
        // permuting the root tuple are distinct members.
        const int n_roots = tp.root_count();
        std::set<std::string> canon;
        for (const PowerMember& m : members) {
          ++cases;
          if (!check_edge_bound(m, tp)) ++bound_failures;
          const int cap = std::max(10, m.graph.n_vertices());
          if (!canon.insert(canonical_form_pinned(m.graph, n_roots, cap)).second)
            ++duplicate_failures;
        }
      }
      PowerOptions reversed;
      reversed.copy_order = {2, 1, 0};
      const std::vector<PowerMember> fwd = enumerate_power(T, 3);
      const std::vector<PowerMember> rev = enumerate_power(T, 3, reversed);
      if (fwd.size() != rev.size()) {
        indep_ok = false;
      } else {
        for (size_t i = 0; i < fwd.size(); ++i) {
          const int cap = std::max(10, fwd[i].graph.n_vertices());
          if (fwd[i].min_s != rev[i].min_s ||
              canonical_form_pinned(fwd[i].graph, tp.root_count(), cap) !=
                  canonical_form_pinned(rev[i].graph, tp.root_count(), cap)) {
            indep_ok = false;
          }
        }
      }
    }

    bound.status = pass_fail(bound_failures == 0 && duplicate_failures == 0);
    bound.detail = "e(H) a >= (|H|-|R|) b for every glued member, members pairwise non-isomorphic";
    bound.values = {{"members", fmt(cases)},
                    {"bound_failures", fmt(bound_failures)},
                    {"duplicates", fmt(duplicate_failures)}};
    indep.status = pass_fail(indep_ok);
    indep.detail = "deduplicated member list is the same under a reversed copy visit order";
    r.add(std::move(bound));
    r.add(std::move(indep));
    r.sweeps.push_back(std::move(sizes));
  }

  return r;
}

Report algebraic_suite(const SuiteConfig& cfg) {
  Report r;
  r.suite = "algebraic";
  const AlgParams a212{2, 1, 2};

  {
    CheckResult c;
    c.name = "rooted-copy-mean";
    SweepSeries sw;
    sw.name = "rooted-copy-mean";
    sw.columns = {"k",     "a",      "b",          "q",    "pattern",
                  "seeds", "tuples", "prediction", "mean", "std_error", "pass"};

    struct Cell {
      AlgParams alg;
      TreeParams tp;
    };
    // The middle parameter triple has no tree of its own (a >= k-1 fails);
    // its instances are probed with the (3,2,3) patterns, whose root count
    // matches.
    const std::vector<Cell> cells = {{AlgParams{2, 1, 2}, TreeParams{2, 1, 2}},
                                     {AlgParams{2, 2, 3}, TreeParams{2, 2, 3}},
                                     {AlgParams{3, 1, 2}, TreeParams{3, 2, 3}}};
    long long cases = 0;
    long long failures = 0;
    std::uint64_t stream = 10;
    for (const Cell& cell : cells) {
      const RootedTree T = build_tree(cell.tp);
      const std::vector<RootedPattern> patterns = desk_patterns(T);
      const long long d = derive_constants(cell.alg.k, cell.alg.a, cell.alg.b).d;
      const std::uint64_t monomials =
          monomial_count(cell.alg.k * cell.alg.b, static_cast<int>(d));
      const bool heavy = monomials > 10'000;
      const int seeds = heavy ? cfg.mc_seeds_heavy : cfg.mc_seeds;
      const int tuples = heavy ? cfg.mc_tuples_heavy : 1;
      for (const std::uint32_t q : cfg.mc_qs) {
        const std::vector<ExpectationReport> reps = rooted_copy_expectation_batch(
            cell.alg, patterns, q, seeds, sub_seed(cfg, stream++), tuples);
        for (size_t j = 0; j < reps.size(); ++j) {
          ++cases;
          if (!reps[j].pass) ++failures;
          sw.rows.push_back({fmt(cell.alg.k), fmt(cell.alg.a), fmt(cell.alg.b),
                             fmt(static_cast<long long>(q)), patterns[j].name, fmt(seeds),
                             fmt(tuples), fmt(reps[j].prediction), fmt(reps[j].mean),
                             fmt(reps[j].std_error), reps[j].pass ? "1" : "0"});
        }
      }
    }
    c.status = pass_fail(failures == 0);
    c.detail = "empirical rooted-copy mean within max(3 SE, 25%) of q^(b m - a e) per cell";
    c.values = {{"cells", fmt(cases)}, {"failures", fmt(failures)}};
    r.add(std::move(c));
    r.sweeps.push_back(std::move(sw));
  }

  {
    CheckResult c;
    c.name = "nonempty-rate";
    bool ok = true;
    for (const std::uint32_t q : {3u, 5u}) {
      const NonemptyReport rep =
          nonempty_rate(a212, q, cfg.nonempty_seeds, sub_seed(cfg, 30 + q));
      ok = ok && rep.pass;
      const std::string tag = "q" + std::to_string(q);
      c.values.push_back({tag + "_rate", fmt(rep.rate)});
      c.values.push_back({tag + "_target", fmt(rep.target)});
      c.values.push_back({tag + "_wilson_lo", fmt(rep.wilson_lo)});
      c.values.push_back({tag + "_wilson_hi", fmt(rep.wilson_hi)});
    }
    c.status = pass_fail(ok);
    c.detail = "instance nonempty fraction stays within a Wilson half-width of 1/q^a";
    r.add(std::move(c));
  }

  {
    CheckResult c;
    c.name = "copy-count-dichotomy";
    c.status = CheckStatus::ReportOnly;
    c.detail = "fraction of root samples with copy count inside [p, q/2); diagnostic only";
    SweepSeries sw;
    sw.name = "copy-count-dichotomy";
    sw.columns = {"q", "samples", "in_gap", "gap_fraction"};
    const RootedTree T = build_tree(TreeParams{2, 1, 2});
    for (const std::uint32_t q : cfg.mc_qs) {
      const DichotomyReport rep =
          copy_dichotomy(a212, T.graph, T.roots, q, cfg.dichotomy_seeds, cfg.dichotomy_tuples,
                         cfg.p_config, sub_seed(cfg, 40 + q));
      sw.rows.push_back(
          {fmt(static_cast<long long>(q)), fmt(rep.samples), fmt(rep.in_gap),
           fmt(rep.gap_fraction)});
    }
    c.values.push_back({"p", fmt(cfg.p_config)});
    r.add(std::move(c));
    r.sweeps.push_back(std::move(sw));
  }

  {
    CheckResult c;
    c.name = "edge-count-trend";
    SweepSeries sw;
    sw.name = "edge-counts";
    sw.columns = {"q",         "seeds",   "nonempty", "mean_edges", "mean_nonempty_edges",
                  "predicted", "ratio"};
    double last_ratio = 0.0;
    std::uint32_t last_q = 0;
    for (const std::uint32_t q : cfg.sweep_qs) {
      const EdgeStatsRow row = edge_stats(a212, q, cfg.sweep_seeds, sub_seed(cfg, 50 + q));
      sw.rows.push_back({fmt(static_cast<long long>(q)), fmt(row.num_seeds), fmt(row.nonempty),
                         fmt(row.mean_edges), fmt(row.mean_nonempty_edges), fmt(row.predicted),
                         fmt(row.ratio)});
      last_ratio = row.ratio;
      last_q = q;
    }
    c.status = pass_fail(last_ratio >= 0.25 && last_ratio <= 4.0);
    c.detail = "mean nonempty edge count over q^(b k - a); the trend is reported, only the "
               "largest-q ratio is asserted to lie in [0.25, 4]";
    c.values = {{"largest_q", fmt(static_cast<long long>(last_q))}, {"ratio", fmt(last_ratio)}};
    r.add(std::move(c));
    r.sweeps.push_back(std::move(sw));
  }

  {
    CheckResult c;
    c.name = "instance-roundtrip";
    const ConstructionParams cp = ConstructionParams::make(a212, 5, sub_seed(cfg, 60));
    const AlgebraicInstance inst = build_instance(cp);
    bool ok = true;
    // The loader rebuilds the edge set from the serialized polynomials and
    // refuses a mismatch, so a successful parse is already the determinism
    // audit; the direct comparison is belt and braces.
    const AlgebraicInstance back = instance_from_json(instance_to_json(inst));
    ok = ok && back.graph.edges() == inst.graph.edges();
    std::vector<char> seen(static_cast<size_t>(cp.alg.k));
    for (const Edge& e : inst.graph.edges()) {
      std::fill(seen.begin(), seen.end(), 0);
      for (const VertexId v : e) seen[static_cast<size_t>(inst.part_of(v))] = 1;
      ok = ok && std::find(seen.begin(), seen.end(), 0) == seen.end();
    }
    c.status = pass_fail(ok);
    c.detail = "serialized instance rebuilds to the identical edge set; every edge is a "
               "transversal of the parts";
    c.values = {{"edges", fmt(inst.graph.n_edges())}};
    r.add(std::move(c));
  }

  {
    CheckResult c;
    c.name = "degenerate-instances";
    bool ok = true;
    // No constraints: every transversal tuple is an edge.
    const ConstructionParams free_cp = ConstructionParams::make(AlgParams{2, 0, 1}, 3, 1);
    ok = ok && instance_edge_count(free_cp) == 9;
    // A nonvanishing constant kills every tuple; the zero polynomial keeps
    // them all.
    const ConstructionParams cp = ConstructionParams::make(a212, 3, 1);
    MultiPoly one = zero_poly(3, cp.num_vars(), static_cast<int>(cp.d));
    one.coeffs[0] = 1;
    const MultiPoly zero = zero_poly(3, cp.num_vars(), static_cast<int>(cp.d));
    ok = ok && build_instance_with_polys(cp, {one}).graph.n_edges() == 0;
    ok = ok && build_instance_with_polys(cp, {zero}).graph.n_edges() == 81;
    c.status = pass_fail(ok);
    c.detail = "a=0 gives the complete transversal graph; constant-1 and zero polynomials hit "
               "the 0 and q^(b k) extremes";
    r.add(std::move(c));
  }

  return r;
}

Report entropy_suite(const SuiteConfig& cfg) {
  Report r;
  r.suite = "entropy";

  struct Pat {
    std::string name;
    Hypertree H;
  };
  std::vector<Pat> patterns;
  patterns.push_back({"edge", single_edge_tree(2)});
  patterns.push_back({"cherry", path_tree(2, 2)});
  patterns.push_back({"tree-2-1-2", hypertree_from_rooted(build_tree(TreeParams{2, 1, 2}))});
  patterns.push_back({"tree-2-2-3", hypertree_from_rooted(build_tree(TreeParams{2, 2, 3}))});
  patterns.push_back({"tree-3-2-3", hypertree_from_rooted(build_tree(TreeParams{3, 2, 3}))});

  CheckResult slack;
  slack.name = "entropy-slack";
  CheckResult marginals;
  marginals.name = "edge-marginals";
  CheckResult homs;
  homs.name = "hom-count-bound";
  CheckResult ninj;
  ninj.name = "self-intersection-mass";

  long long cases = 0;
  long long slack_failures = 0;
  long long marginal_failures = 0;
  long long hom_failures = 0;
  long long mass_failures = 0;
  long long consequent_cases = 0;
  long long consequent_failures = 0;
  double min_slack = std::numeric_limits<double>::infinity();

  for (size_t pi = 0; pi < patterns.size(); ++pi) {
    SweepSeries sw;
    sw.name = "hom-counts-" + patterns[pi].name;
    sw.columns = {"n", "M", "hom_count", "bound"};
    const int k = patterns[pi].H.graph.k();
    for (int t = 0; t < cfg.entropy_hosts; ++t) {
      Rng rng = trial_rng(cfg.master_seed, 100 + static_cast<std::uint64_t>(pi),
                          static_cast<std::uint64_t>(t));
      const HostProfile host = make_host_profile(random_host(k, cfg.host_n_max, rng));
      const WeightedHomTable table = build_mu(patterns[pi].H, host);
      ++cases;

      const Property1Report p1 = verify_property1(table, host);
      if (!p1.pass) ++slack_failures;
      min_slack = std::min(min_slack, p1.slack);

      if (!verify_table_marginals(table, host).pass) ++marginal_failures;

      const SidorenkoReport sid = sidorenko_check(patterns[pi].H, host);
      if (!sid.pass) ++hom_failures;
      sw.rows.push_back({fmt(host.n), fmt(host.M), fmt(sid.hom_count), fmt(sid.bound)});

      const NoninjReport nr = noninjective_mass(table, host);
      if (!nr.pass) ++mass_failures;
      if (nr.consequent_applicable) {
        ++consequent_cases;
        if (!nr.consequent_pass) ++consequent_failures;
      }
    }
    r.sweeps.push_back(std::move(sw));
  }

  slack.status = pass_fail(slack_failures == 0);
  slack.detail = "D(mu) <= e(H) ln(n^k / M) with slack tolerance -1e-9";
  slack.values = {{"cases", fmt(cases)},
                  {"failures", fmt(slack_failures)},
                  {"min_slack", fmt(min_slack)}};
  marginals.status = pass_fail(marginal_failures == 0);
  marginals.detail = "every adjacent-pair marginal equals deg(T)/M as an exact rational";
  marginals.values = {{"cases", fmt(cases)}, {"failures", fmt(marginal_failures)}};
  homs.status = pass_fail(hom_failures == 0);
  homs.detail = "|Hom(H,X)| >= n^|H| (M/n^k)^e(H), compared in exact integers";
  homs.values = {{"cases", fmt(cases)}, {"failures", fmt(hom_failures)}};
  ninj.status = pass_fail(mass_failures == 0 && consequent_failures == 0);
  ninj.detail = "exact non-injective mass under the closed-form bound; where the bound is below "
                "1, the injective count clears its lower bound too";
  ninj.values = {{"cases", fmt(cases)},
                 {"mass_failures", fmt(mass_failures)},
                 {"consequent_cases", fmt(consequent_cases)},
                 {"consequent_failures", fmt(consequent_failures)}};
  r.add(std::move(slack));
  r.add(std::move(marginals));
  r.add(std::move(homs));
  r.add(std::move(ninj));

  {
    CheckResult c;
    c.name = "power-copy-extraction";
    const TreeParams tp{2, 1, 2};
    bool ok = true;

    // Fixture with both-side codegrees <= 1: x1 y2 + x2 + y1 over F_5. No
    // two vertices share two neighbors, so no glued member embeds and the
    // extraction must come back empty.
    const ConstructionParams cp = ConstructionParams::make(AlgParams{2, 1, 2}, 5, 0);
    MultiPoly f = zero_poly(5, 4, static_cast<int>(cp.d));
    f.coeffs[static_cast<size_t>(monomial_rank({1, 0, 0, 1}))] = 1;
    f.coeffs[static_cast<size_t>(monomial_rank({0, 1, 0, 0}))] = 1;
    f.coeffs[static_cast<size_t>(monomial_rank({0, 0, 1, 0}))] = 1;
    const AlgebraicInstance inst = build_instance_with_polys(cp, {f});

    const RootedTree T = build_tree(tp);
    for (int p = 2; p <= 3; ++p) {
      std::vector<Hypergraph> family;
      for (const PowerMember& m : enumerate_power(T, p)) {
        if (m.min_s == p) family.push_back(m.graph);
      }
      ok = ok && !family.empty() && !find_family_copy(inst, family).has_value();
    }
    const PowerCopyResult none = find_power_copy(inst.graph, tp, 3);
    ok = ok && !none.witness.has_value();

    // Complete bipartite 2x3: every root pair on the small side carries
    // three copies, one over p' = 3, so a witness must come out.
    Hypergraph k23(2, 5);
    for (int u = 0; u < 2; ++u) {
      for (int w = 2; w < 5; ++w) k23.add_edge({u, w});
    }
    const PowerCopyResult found = find_power_copy(k23, tp, 3);
    ok = ok && found.witness.has_value() && found.witness->min_s == 3;

    c.status = pass_fail(ok);
    c.detail = "no extraction from the codegree-1 instance, a three-copy witness from the "
               "complete bipartite fixture";
    c.values = {{"instance_edges", fmt(inst.graph.n_edges())},
                {"p_prime", fmt(none.p_prime)},
                {"best_group", fmt(none.best_group)}};
    r.add(std::move(c));
  }

  return r;
}

Report lifting_suite(const SuiteConfig& cfg) {
  Report r;
  r.suite = "lifting";
  ExOptions opts;
  opts.node_budget = static_cast<std::uint64_t>(cfg.oracle_budget);

  LiftedFamilySpec spec;
  spec.k = 3;
  spec.l = 2;
  spec.base = {p3_path()};

  {
    CheckResult c;
    c.name = "lift-identity";
    SweepSeries sw;
    sw.name = "lift-identity";
    sw.columns = {"n_base", "ex_base", "ex_lifted", "equal"};
    bool ok = true;
    for (const LiftIdentityRow& row : lifting_identity_table(spec, 4, 6, opts)) {
      ok = ok && row.equal;
      sw.rows.push_back({fmt(row.n_base), fmt(row.ex_base), fmt(row.ex_lifted),
                         row.equal ? "1" : "0"});
    }
    c.status = pass_fail(ok);
    c.detail = "extremal counts agree between the base family and its lift on one more vertex";
    r.add(std::move(c));
    r.sweeps.push_back(std::move(sw));
  }

  {
    CheckResult c;
    c.name = "path-extremal-range";
    bool ok = true;
    for (int n = 4; n <= 7; ++n) {
      const ExResult res = exact_ex(n, 2, {p3_path()}, opts);
      ok = ok && (res.value == n - 1 || res.value == n);
      c.values.push_back({"n" + std::to_string(n), fmt(res.value)});
    }
    c.status = pass_fail(ok);
    c.detail = "the three-edge-path extremal count is n or n-1 across the oracle range";
    r.add(std::move(c));
  }

  {
    CheckResult c;
    c.name = "edge-family-zero";
    bool ok = true;
    long long cases = 0;
    for (const int k : {2, 3}) {
      const std::vector<Hypergraph> family = {single_edge_graph(k)};
      for (int n = k; n <= k + 4; ++n) {
        ++cases;
        ok = ok && exact_ex(n, k, family, opts).value == 0;
      }
    }
    c.status = pass_fail(ok);
    c.detail = "forbidding a single edge forces the empty graph";
    c.values = {{"cases", fmt(cases)}};
    r.add(std::move(c));
  }

  {
    CheckResult c;
    c.name = "sunflower-kernel";
    bool ok = true;
    long long cases = 0;
    for (const int k : {2, 3}) {
      for (int t = 0; t < k; ++t) {
        ++cases;
        const int n = t + 3 * (k - t) + 1;  // three whole petals plus a spare vertex
        const Hypergraph S = build_sunflower(k, t, n);
        ok = ok && S.n_edges() == (n - t) / (k - t);
        std::vector<VertexId> kernel;
        for (int j = 0; j < t; ++j) kernel.push_back(j);
        for (int i = 0; i < S.n_edges() && ok; ++i) {
          for (int j = i + 1; j < S.n_edges() && ok; ++j) {
            std::vector<VertexId> common;
            std::set_intersection(S.edge(i).begin(), S.edge(i).end(), S.edge(j).begin(),
                                  S.edge(j).end(), std::back_inserter(common));
            ok = common == kernel;
          }
        }
      }
    }
    c.status = pass_fail(ok);
    c.detail = "any two petals intersect in exactly the kernel";
    c.values = {{"cases", fmt(cases)}};
    r.add(std::move(c));
  }

  return r;
}

}  // namespace

void SuiteConfig::validate() const {
  const auto need = [](bool cond, const std::string& what) {
    if (!cond) throw ParamError("config field " + what + " out of range");
  };
  need(mc_seeds >= 2, "mc_seeds");
  need(mc_seeds_heavy >= 2, "mc_seeds_heavy");
  need(mc_tuples_heavy >= 1, "mc_tuples_heavy");
  need(nonempty_seeds >= 1, "nonempty_seeds");
  need(dichotomy_seeds >= 1, "dichotomy_seeds");
  need(dichotomy_tuples >= 1, "dichotomy_tuples");
  need(p_config >= 1, "p_config");
  need(entropy_hosts >= 1, "entropy_hosts");
  need(host_n_max >= 3, "host_n_max");
  need(oracle_budget >= 1, "oracle_budget");
  need(!mc_qs.empty(), "mc_qs");
  need(!sweep_qs.empty(), "sweep_qs");
  need(sweep_seeds >= 1, "sweep_seeds");
}

std::string suite_config_to_json(const SuiteConfig& c) {
  json j;
  j["master_seed"] = c.master_seed;
  j["mc_seeds"] = c.mc_seeds;
  j["mc_seeds_heavy"] = c.mc_seeds_heavy;
  j["mc_tuples_heavy"] = c.mc_tuples_heavy;
  j["nonempty_seeds"] = c.nonempty_seeds;
  j["dichotomy_seeds"] = c.dichotomy_seeds;
  j["dichotomy_tuples"] = c.dichotomy_tuples;
  j["p_config"] = c.p_config;
  j["entropy_hosts"] = c.entropy_hosts;
  j["host_n_max"] = c.host_n_max;
  j["oracle_budget"] = c.oracle_budget;
  j["mc_qs"] = c.mc_qs;
  j["sweep_qs"] = c.sweep_qs;
  j["sweep_seeds"] = c.sweep_seeds;
  return j.dump(2);
}

SuiteConfig suite_config_from_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw ParamError("config is not a JSON object");
  SuiteConfig c;
  const auto take = [&](const char* key, auto& field) {
    if (j.contains(key)) {
      j.at(key).get_to(field);
      j.erase(key);
    }
  };
  take("master_seed", c.master_seed);
  take("mc_seeds", c.mc_seeds);
  take("mc_seeds_heavy", c.mc_seeds_heavy);
  take("mc_tuples_heavy", c.mc_tuples_heavy);
  take("nonempty_seeds", c.nonempty_seeds);
  take("dichotomy_seeds", c.dichotomy_seeds);
  take("dichotomy_tuples", c.dichotomy_tuples);
  take("p_config", c.p_config);
  take("entropy_hosts", c.entropy_hosts);
  take("host_n_max", c.host_n_max);
  take("oracle_budget", c.oracle_budget);
  take("mc_qs", c.mc_qs);
  take("sweep_qs", c.sweep_qs);
  take("sweep_seeds", c.sweep_seeds);
  if (!j.empty()) throw ParamError("unknown config field: " + j.begin().key());
  c.validate();
  return c;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"tree", "algebraic", "entropy", "lifting"};
  return names;
}

Report run_suite(const std::string& name, const SuiteConfig& config) {
  config.validate();
  const auto t0 = std::chrono::steady_clock::now();
  Report r;
  if (name == "tree") {
    r = tree_suite(config);
  } else if (name == "algebraic") {
    r = algebraic_suite(config);
  } else if (name == "entropy") {
    r = entropy_suite(config);
  } else if (name == "lifting") {
    r = lifting_suite(config);
  } else {
    throw ParamError("unknown suite \"" + name + "\" (expected tree, algebraic, entropy, or "
                     "lifting)");
  }
  r.master_seed = config.master_seed;
  r.config_echo = suite_config_to_json(config);
  r.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace turan

#include "turan/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>
#include <utility>

#include "turan/errors.hpp"

namespace turan {

namespace {

std::uint64_t factorial_u64(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

BigInt bigint_pow(const BigInt& base, long long e) {
  if (e < 0) throw InternalError("negative exponent in integer power");
  BigInt acc = 1;
  BigInt b = base;
  long long r = e;
  while (r > 0) {
    if (r & 1) acc *= b;
    b *= b;
    r >>= 1;
  }
  return acc;
}

// Replays the build order against the pattern and throws if any step breaks
// the hypertree contract: each non-initial edge must meet the union of the
// earlier ones in exactly its (k-1)-element attach set, which must lie in
// some earlier edge.
void check_build_order(const Hypergraph& g, const std::vector<BuildStep>& order) {
  const int k = g.k();
  if (static_cast<int>(order.size()) != g.n_edges()) {
    throw ParamError("build order must list every edge exactly once");
  }
  std::vector<char> placed(static_cast<size_t>(g.n_vertices()), 0);
  std::set<Edge> seen;
  std::vector<Edge> prior;
  for (size_t step = 0; step < order.size(); ++step) {
    Edge e = order[step].edge;
    std::sort(e.begin(), e.end());
    if (!g.has_edge(e)) throw ParamError("build order contains an edge not in the pattern");
    if (!seen.insert(e).second) throw ParamError("build order repeats an edge");

    std::vector<VertexId> attach = order[step].attach;
    std::sort(attach.begin(), attach.end());
    std::vector<VertexId> overlap;
    for (VertexId v : e) {
      if (placed[static_cast<size_t>(v)]) overlap.push_back(v);
    }
    if (step == 0) {
      if (!attach.empty()) throw ParamError("initial build step must have an empty attach set");
    } else {
      if (overlap != attach || static_cast<int>(attach.size()) != k - 1) {
        throw ParamError("build step " + std::to_string(step) +
                         " does not meet the prior union in exactly its attach set");
      }
      bool inside_prior = false;
      for (const Edge& f : prior) {
        if (std::includes(f.begin(), f.end(), attach.begin(), attach.end())) {
          inside_prior = true;
          break;
        }
      }
      if (!inside_prior) {
        throw ParamError("attach set of step " + std::to_string(step) +
                         " lies in no earlier edge");
      }
    }
    for (VertexId v : e) placed[static_cast<size_t>(v)] = 1;
    prior.push_back(std::move(e));
  }
  for (int v = 0; v < g.n_vertices(); ++v) {
    if (!placed[static_cast<size_t>(v)]) {
      throw ParamError("pattern vertex " + std::to_string(v) + " lies outside every edge");
    }
  }
}

// All ordered (k-1)-tuples of pattern vertices that sit inside a common
// edge, deduplicated, in lexicographic order.
std::vector<std::vector<VertexId>> adjacent_tuples(const Hypergraph& g) {
  std::set<std::vector<VertexId>> out;
  const int k = g.k();
  for (const Edge& e : g.edges()) {
    for (int skip = 0; skip < k; ++skip) {
      std::vector<VertexId> base;
      for (int j = 0; j < k; ++j) {
        if (j != skip) base.push_back(e[static_cast<size_t>(j)]);
      }
      std::sort(base.begin(), base.end());
      do {
        out.insert(base);
      } while (std::next_permutation(base.begin(), base.end()));
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace

HostProfile make_host_profile(Hypergraph X) {
  if (X.n_vertices() < 2) throw ParamError("host needs at least two vertices");
  HostProfile h;
  h.n = X.n_vertices();
  h.M = static_cast<long long>(factorial_u64(X.k())) * X.n_edges();
  // r_eff is undefined for an edgeless host; leave the default and let the
  // distribution builders reject M = 0 when it matters.
  if (h.M > 0) {
    h.r_eff = X.k() - std::log(static_cast<double>(h.M)) / std::log(static_cast<double>(h.n));
  }
  h.X = std::move(X);
  return h;
}

Hypertree single_edge_tree(int k) {
  if (k < 2) throw ParamError("arity must be at least 2");
  Hypergraph g(k, k);
  Edge e(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) e[static_cast<size_t>(i)] = i;
  g.add_edge(e);
  return Hypertree{std::move(g), {BuildStep{e, {}}}};
}

Hypertree path_tree(int k, int n_edges) {
  if (k < 2) throw ParamError("arity must be at least 2");
  if (n_edges < 1) throw ParamError("a path needs at least one edge");
  Hypergraph g(k, n_edges + k - 1);
  std::vector<BuildStep> order;
  for (int i = 0; i < n_edges; ++i) {
    Edge e(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) e[static_cast<size_t>(j)] = i + j;
    g.add_edge(e);
    std::vector<VertexId> attach;
    if (i > 0) {
      for (int j = 0; j < k - 1; ++j) attach.push_back(i + j);
    }
    order.push_back(BuildStep{std::move(e), std::move(attach)});
  }
  return Hypertree{std::move(g), std::move(order)};
}

Hypertree hypertree_from_rooted(const RootedTree& T) {
  Hypertree h;
  h.graph = T.graph;
  h.graph.clear_partition();
  h.build_order = T.build_order;
  check_build_order(h.graph, h.build_order);
  return h;
}

Hypertree derive_build_order(const Hypergraph& g) {
  if (g.n_edges() < 1) throw ParamError("an empty graph is not a hypertree");
  const int k = g.k();
  const int m = g.n_edges();
  std::vector<char> used(static_cast<size_t>(m), 0);
  std::vector<char> placed(static_cast<size_t>(g.n_vertices()), 0);
  std::vector<BuildStep> order;

  for (VertexId v : g.edge(0)) placed[static_cast<size_t>(v)] = 1;
  used[0] = 1;
  order.push_back(BuildStep{g.edge(0), {}});

  while (static_cast<int>(order.size()) < m) {
    int found = -1;
    std::vector<VertexId> attach;
    for (int i = 0; i < m && found < 0; ++i) {
      if (used[static_cast<size_t>(i)]) continue;
      std::vector<VertexId> overlap;
      for (VertexId v : g.edge(i)) {
        if (placed[static_cast<size_t>(v)]) overlap.push_back(v);
      }
      if (static_cast<int>(overlap.size()) != k - 1) continue;
      for (const BuildStep& s : order) {
        if (std::includes(s.edge.begin(), s.edge.end(), overlap.begin(), overlap.end())) {
          found = i;
          attach = std::move(overlap);
          break;
        }
      }
    }
    if (found < 0) {
      throw ParamError("not a hypertree: no remaining edge extends the current union");
    }
    used[static_cast<size_t>(found)] = 1;
    for (VertexId v : g.edge(found)) placed[static_cast<size_t>(v)] = 1;
    order.push_back(BuildStep{g.edge(found), std::move(attach)});
  }

  Hypertree h{g, std::move(order)};
  h.graph.clear_partition();
  check_build_order(h.graph, h.build_order);
  return h;
}

long long DegIndex::deg_of(const std::vector<VertexId>& tuple) const {
  std::vector<VertexId> key = tuple;
  std::sort(key.begin(), key.end());
  if (std::adjacent_find(key.begin(), key.end()) != key.end()) {
    throw ParamError("degree query tuple has repeated vertices");
  }
  if (static_cast<int>(key.size()) != k - 1) {
    throw ParamError("degree query tuple must have k-1 vertices");
  }
  const auto it = by_set.find(key);
  return it == by_set.end() ? 0 : it->second;
}

DegIndex build_deg_index(const Hypergraph& X) {
  DegIndex di;
  di.k = X.k();
  di.M = static_cast<long long>(factorial_u64(X.k())) * X.n_edges();
  for (const Edge& e : X.edges()) {
    for (int skip = 0; skip < di.k; ++skip) {
      std::vector<VertexId> key;
      for (int j = 0; j < di.k; ++j) {
        if (j != skip) key.push_back(e[static_cast<size_t>(j)]);
      }
      ++di.by_set[key];
    }
  }
  return di;
}

WeightedHomTable build_mu(const Hypertree& H, const HostProfile& host) {
  const Hypergraph& G = H.graph;
  const Hypergraph& X = host.X;
  if (G.k() != X.k()) throw ParamError("pattern and host arity differ");
  check_build_order(G, H.build_order);
  if (host.M == 0) {
    throw ParamError("host has no edges, so no edge distribution exists");
  }
  const int k = G.k();
  const DegIndex deg = build_deg_index(X);

  WeightedHomTable table;
  table.pattern = G;
  table.n = host.n;
  table.M = host.M;

  // Initial edge: uniform over the M ordered host edges. The sorted pattern
  // edge receives each permutation of each host edge.
  {
    Edge pat = H.build_order[0].edge;
    std::sort(pat.begin(), pat.end());
    const BigRat w(1, host.M);
    for (const Edge& he : X.edges()) {
      Edge perm = he;
      std::sort(perm.begin(), perm.end());
      do {
        HomMap m(static_cast<size_t>(G.n_vertices()), kUnassigned);
        for (int j = 0; j < k; ++j) {
          m[static_cast<size_t>(pat[static_cast<size_t>(j)])] = perm[static_cast<size_t>(j)];
        }
        table.support.push_back(std::move(m));
        table.weights.push_back(w);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }

  // Each later edge extends every partial map by a uniform choice among the
  // host edges through the image of its attach set.
  for (size_t step = 1; step < H.build_order.size(); ++step) {
    const BuildStep& bs = H.build_order[step];
    Edge e = bs.edge;
    std::sort(e.begin(), e.end());
    std::vector<VertexId> attach = bs.attach;
    std::sort(attach.begin(), attach.end());
    VertexId fresh = kUnassigned;
    for (VertexId v : e) {
      if (!std::binary_search(attach.begin(), attach.end(), v)) fresh = v;
    }

    std::vector<HomMap> next_support;
    std::vector<BigRat> next_weights;
    for (size_t i = 0; i < table.support.size(); ++i) {
      const HomMap& m = table.support[i];
      std::vector<VertexId> img;
      img.reserve(attach.size());
      for (VertexId v : attach) img.push_back(m[static_cast<size_t>(v)]);
      std::sort(img.begin(), img.end());
      const long long d = deg.by_set.count(img) ? deg.by_set.at(img) : 0;
      if (d == 0) {
        // The attach image lies inside the image of an earlier edge, so it
        // has at least one extension; degree zero means the table or the
        // build order is corrupt.
        throw InternalError("attachment image with degree zero during distribution build");
      }
      const BigRat w = table.weights[i] / d;
      // Host edges through img, in index order; each contributes the unique
      // vertex outside img as the image of the fresh pattern vertex.
      for (int ei : X.incident_edges(img[0])) {
        const Edge& he = X.edge(ei);
        if (!std::includes(he.begin(), he.end(), img.begin(), img.end())) continue;
        VertexId x = kUnassigned;
        for (VertexId hv : he) {
          if (!std::binary_search(img.begin(), img.end(), hv)) x = hv;
        }
        HomMap ext = m;
        ext[static_cast<size_t>(fresh)] = x;
        next_support.push_back(std::move(ext));
        next_weights.push_back(w);
      }
    }
    table.support = std::move(next_support);
    table.weights = std::move(next_weights);
  }

  BigRat total = 0;
  for (const BigRat& w : table.weights) total += w;
  if (total != 1) throw InternalError("distribution weights do not sum to one");
  return table;
}

double entropy_D(const WeightedHomTable& table) {
  const double n = table.n;
  double d = table.pattern.n_vertices() * std::log(n);
  for (const BigRat& w : table.weights) {
    const double x = w.convert_to<double>();
    if (x > 0.0) d += x * std::log(x);
  }
  return d;
}

Property1Report verify_property1(const WeightedHomTable& table, const HostProfile& host) {
  Property1Report rep;
  rep.d_mu = entropy_D(table);
  rep.d_eps = host.X.k() * std::log(static_cast<double>(host.n)) -
              std::log(static_cast<double>(host.M));
  rep.e_H = table.pattern.n_edges();
  rep.slack = rep.e_H * rep.d_eps - rep.d_mu;
  rep.pass = rep.slack >= -1e-9;
  return rep;
}

Property1Report verify_property1(const Hypertree& H, const HostProfile& host) {
  return verify_property1(build_mu(H, host), host);
}

Property2Report verify_table_marginals(const WeightedHomTable& table, const HostProfile& host) {
  const Hypergraph& G = table.pattern;
  const int k = G.k();
  const DegIndex deg = build_deg_index(host.X);
  Property2Report rep;
  rep.pass = true;

  // Odometer over ordered distinct (k-1)-tuples of host vertices.
  const auto for_each_host_tuple = [&](const std::function<void(const std::vector<VertexId>&)>& f) {
    std::vector<VertexId> t(static_cast<size_t>(k - 1), 0);
    const std::function<void(int)> rec = [&](int pos) {
      if (pos == k - 1) {
        f(t);
        return;
      }
      for (VertexId v = 0; v < host.n; ++v) {
        bool dup = false;
        for (int j = 0; j < pos; ++j) {
          if (t[static_cast<size_t>(j)] == v) dup = true;
        }
        if (dup) continue;
        t[static_cast<size_t>(pos)] = v;
        rec(pos + 1);
      }
    };
    rec(0);
  };

  for (const std::vector<VertexId>& S : adjacent_tuples(G)) {
    // One pass over the support accumulates the marginal of S exactly.
    std::map<std::vector<VertexId>, BigRat> marginal;
    std::vector<VertexId> img(S.size());
    for (size_t i = 0; i < table.support.size(); ++i) {
      for (size_t j = 0; j < S.size(); ++j) {
        img[j] = table.support[i][static_cast<size_t>(S[j])];
      }
      marginal[img] += table.weights[i];
    }
    for_each_host_tuple([&](const std::vector<VertexId>& T) {
      ++rep.pairs_checked;
      const BigRat expected(deg.deg_of(T), table.M);
      const auto it = marginal.find(T);
      const BigRat actual = it == marginal.end() ? BigRat(0) : it->second;
      if (actual != expected) {
        rep.pass = false;
        const double dev = std::fabs((actual - expected).convert_to<double>());
        if (dev >= rep.worst_deviation) {
          rep.worst_deviation = dev;
          rep.worst_S = S;
          rep.worst_T = T;
        }
      }
    });
  }
  return rep;
}

Property2Report verify_property2(const Hypertree& H, const HostProfile& host) {
  return verify_table_marginals(build_mu(H, host), host);
}

SidorenkoReport sidorenko_check(const Hypertree& H, const HostProfile& host) {
  check_build_order(H.graph, H.build_order);
  SidorenkoReport rep;
  rep.hom_count = count_homs(H.graph, host.X);
  const long long e = H.graph.n_edges();
  const long long nH = H.graph.n_vertices();
  const int k = H.graph.k();
  rep.lhs_scaled = BigInt(rep.hom_count) * bigint_pow(BigInt(host.n), k * e);
  rep.rhs_scaled = bigint_pow(BigInt(host.n), nH) * bigint_pow(BigInt(host.M), e);
  rep.pass = rep.lhs_scaled >= rep.rhs_scaled;
  rep.bound = std::exp(nH * std::log(static_cast<double>(host.n)) +
                       e * (std::log(static_cast<double>(host.M)) -
                            k * std::log(static_cast<double>(host.n))));
  return rep;
}

NoninjReport noninjective_mass(const WeightedHomTable& table, const HostProfile& host) {
  NoninjReport rep;

  for (size_t i = 0; i < table.support.size(); ++i) {
    HomMap img = table.support[i];
    std::sort(img.begin(), img.end());
    if (std::adjacent_find(img.begin(), img.end()) != img.end()) {
      rep.mass += table.weights[i];
    }
  }

  const long long nG = table.pattern.n_vertices();
  const int k = table.pattern.k();
  const long long c_G = nG * nG - (2 * k - 1) * nG + static_cast<long long>(k) * (k - 1);
  // n^(r-1) = n^(k-1) / M exactly, by the definition of r_eff.
  rep.bound = BigRat(bigint_pow(BigInt(host.n), k - 1) * c_G, BigInt(2) * host.M);
  rep.pass = rep.mass <= rep.bound;

  rep.inj_count = count_inj(table.pattern, host.X);
  const long long e = table.pattern.n_edges();
  // n^((1-r)|G| + (k-1)r) equals the homomorphism-count lower bound
  // n^|G| (M/n^k)^e, again exactly.
  const BigRat sidorenko(bigint_pow(BigInt(host.n), nG) * bigint_pow(BigInt(host.M), e),
                         bigint_pow(BigInt(host.n), k * e));
  rep.consequent_applicable = rep.bound < 1;
  if (rep.consequent_applicable) {
    rep.inj_lower = sidorenko * (1 - rep.bound);
    rep.consequent_pass = BigRat(BigInt(rep.inj_count)) >= rep.inj_lower;
  } else {
    rep.consequent_pass = true;
  }
  return rep;
}

NoninjReport noninjective_mass(const Hypertree& H, const HostProfile& host) {
  return noninjective_mass(build_mu(H, host), host);
}

namespace {

// Smallest number of root-respecting tree copies inside U whose union is all
// of U. The caller guarantees U is a union of such copies, so a cover
// exists; every copy covers its own vertices, which makes edge coverage
// sufficient.
int min_cover_tag(const Hypergraph& U, const RootedTree& T) {
  const int n_roots = static_cast<int>(T.roots.size());
  HomMap pinned(static_cast<size_t>(T.graph.n_vertices()), kUnassigned);
  for (int i = 0; i < n_roots; ++i) {
    pinned[static_cast<size_t>(T.roots[static_cast<size_t>(i)])] = i;
  }

  // Edge subsets of U hit by each copy, as bitmasks.
  std::vector<std::uint64_t> copies;
  const std::uint64_t full = U.n_edges() >= 64 ? ~0ULL : (1ULL << U.n_edges()) - 1;
  if (U.n_edges() >= 64) throw LimitError("union too large for cover search", 63, U.n_edges());
  enumerate_inj(T.graph, U, pinned, HomOptions{true, false}, [&](const HomMap& m) {
    std::uint64_t mask = 0;
    Edge img(static_cast<size_t>(T.graph.k()));
    for (const Edge& e : T.graph.edges()) {
      for (size_t j = 0; j < e.size(); ++j) img[j] = m[static_cast<size_t>(e[j])];
      std::sort(img.begin(), img.end());
      mask |= 1ULL << U.edge_index(img);
    }
    copies.push_back(mask);
    return true;
  });
  std::sort(copies.begin(), copies.end());
  copies.erase(std::unique(copies.begin(), copies.end()), copies.end());
  if (copies.empty()) throw InternalError("no rooted copy inside a union of rooted copies");

  // Exact minimum set cover by branching on the first uncovered edge.
  int best = static_cast<int>(copies.size()) + 1;
  const std::function<void(std::uint64_t, int)> rec = [&](std::uint64_t covered, int used) {
    if (covered == full) {
      best = std::min(best, used);
      return;
    }
    if (used + 1 >= best) return;
    std::uint64_t missing = full & ~covered;
    const int first = __builtin_ctzll(missing);
    for (std::uint64_t c : copies) {
      if (c & (1ULL << first)) rec(covered | c, used + 1);
    }
  };
  rec(0, 0);
  if (best > static_cast<int>(copies.size())) {
    throw InternalError("cover search failed on a union of rooted copies");
  }
  return best;
}

}  // namespace

PowerCopyResult find_power_copy(const Hypergraph& X, const TreeParams& tree, int p) {
  tree.validate();
  if (p < 2) throw ParamError("power search needs p >= 2");
  const RootedTree T = build_tree(tree);
  const int a = tree.a;
  const int n_roots = tree.root_count();

  PowerCopyResult res;
  {
    unsigned __int128 pp = 1;
    for (long long i = static_cast<long long>(p - 2) * a + 1; i <= static_cast<long long>(p - 1) * a;
         ++i) {
      pp *= static_cast<unsigned __int128>(i);
      if (pp > UINT64_MAX / 2) throw LimitError("copy threshold overflows", UINT64_MAX / 2, p);
    }
    res.p_prime = static_cast<std::uint64_t>(pp) + 1;
  }
  res.threshold_edges =
      std::pow(2.0 * static_cast<double>(res.p_prime), 1.0 / tree.b) *
      std::pow(static_cast<double>(X.n_vertices()),
               static_cast<double>(tree.k) - static_cast<double>(a) / tree.b);
  if (X.n_edges() == 0) return res;

  // Group injective label-free copies by their ordered root image.
  std::map<std::vector<VertexId>, std::vector<HomMap>> groups;
  std::uint64_t total = 0;
  enumerate_inj(T.graph, X, {}, HomOptions{true, false}, [&](const HomMap& m) {
    std::vector<VertexId> key;
    key.reserve(static_cast<size_t>(n_roots));
    for (VertexId r : T.roots) key.push_back(m[static_cast<size_t>(r)]);
    groups[key].push_back(m);
    return ++total <= 1'000'000;
  });
  if (total > 1'000'000) {
    throw LimitError("too many tree copies in the host", 1'000'000, total);
  }

  res.groups = static_cast<long long>(groups.size());
  for (const auto& [key, homs] : groups) {
    res.best_group = std::max(res.best_group, static_cast<long long>(homs.size()));
  }

  for (const auto& [root_img, homs_raw] : groups) {
    if (homs_raw.size() < res.p_prime) continue;
    std::vector<HomMap> homs = homs_raw;
    std::sort(homs.begin(), homs.end());

    // Grow the union one copy at a time. The tag moves up by at most one per
    // copy and reaches p before the group is exhausted, because a union of
    // tag p-1 holds at most (p-1)a non-root vertices and therefore fewer
    // than p' distinct white tuples.
    std::vector<VertexId> local_of(static_cast<size_t>(X.n_vertices()), kUnassigned);
    std::vector<VertexId> host_of;
    for (VertexId r : root_img) {
      local_of[static_cast<size_t>(r)] = static_cast<VertexId>(host_of.size());
      host_of.push_back(r);
    }
    std::vector<Edge> union_edges;
    std::vector<std::vector<VertexId>> copy_whites;

    for (size_t ci = 0; ci < homs.size(); ++ci) {
      const HomMap& m = homs[ci];
      const size_t verts_before = host_of.size();
      const size_t edges_before = union_edges.size();
      std::vector<VertexId> whites;
      for (int i = 0; i < a; ++i) {
        const VertexId hv = m[static_cast<size_t>(i)];
        if (local_of[static_cast<size_t>(hv)] == kUnassigned) {
          local_of[static_cast<size_t>(hv)] = static_cast<VertexId>(host_of.size());
          host_of.push_back(hv);
        }
        whites.push_back(local_of[static_cast<size_t>(hv)]);
      }
      for (const Edge& e : T.graph.edges()) {
        Edge img;
        for (VertexId v : e) img.push_back(local_of[static_cast<size_t>(m[static_cast<size_t>(v)])]);
        std::sort(img.begin(), img.end());
        if (std::find(union_edges.begin(), union_edges.end(), img) == union_edges.end()) {
          union_edges.push_back(img);
        }
      }
      copy_whites.push_back(whites);

      Hypergraph U(tree.k, static_cast<int>(host_of.size()));
      for (const Edge& e : union_edges) U.add_edge(e);
      const int tag = min_cover_tag(U, T);
      if (tag == p) {
        PowerMember member;
        member.graph = std::move(U);
        for (int i = 0; i < n_roots; ++i) member.roots.push_back(i);
        member.min_s = p;
        member.copy_white_images = copy_whites;
        // Carry part labels over when every copy agrees on them; unions
        // glued against the path orientation need not be labelable.
        std::vector<int> parts(static_cast<size_t>(member.graph.n_vertices()), -1);
        bool consistent = true;
        for (size_t cj = 0; cj <= ci && consistent; ++cj) {
          const HomMap& hm = homs[cj];
          for (int v = 0; v < T.graph.n_vertices() && consistent; ++v) {
            const VertexId lv = local_of[static_cast<size_t>(hm[static_cast<size_t>(v)])];
            if (lv == kUnassigned) continue;
            const int want = T.graph.part_of(v);
            if (parts[static_cast<size_t>(lv)] == -1) {
              parts[static_cast<size_t>(lv)] = want;
            } else if (parts[static_cast<size_t>(lv)] != want) {
              consistent = false;
            }
          }
        }
        if (consistent &&
            std::find(parts.begin(), parts.end(), -1) == parts.end()) {
          try {
            member.graph.set_partition(parts);
          } catch (const ParamError&) {
            // Leave the witness unlabeled.
          }
        }
        res.witness = std::move(member);
        res.witness_roots = root_img;
        return res;
      }
      if (tag > p) {
        // Defensive trim: drop the copy that overshot and keep scanning.
        host_of.resize(verts_before);
        std::fill(local_of.begin(), local_of.end(), kUnassigned);
        for (size_t i = 0; i < host_of.size(); ++i) {
          local_of[static_cast<size_t>(host_of[i])] = static_cast<VertexId>(i);
        }
        union_edges.resize(edges_before);
        copy_whites.pop_back();
      }
    }
  }
  return res;
}

}  // namespace turan

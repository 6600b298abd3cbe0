#include "turan/hypergraph.hpp"

#include <algorithm>
#include <cstring>

#include "turan/errors.hpp"

namespace turan {

Hypergraph::Hypergraph(int k, int n_vertices) : k_(k), n_(n_vertices) {
  if (k < 1) throw ParamError("hypergraph arity must be >= 1, got " + std::to_string(k));
  if (n_vertices < 0)
    throw ParamError("vertex count must be >= 0, got " + std::to_string(n_vertices));
}

void Hypergraph::add_edge(Edge e) {
  if (static_cast<int>(e.size()) != k_)
    throw ParamError("edge has " + std::to_string(e.size()) + " vertices, expected k=" +
                     std::to_string(k_));
  std::sort(e.begin(), e.end());
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 || e[i] >= n_)
      throw ParamError("edge vertex " + std::to_string(e[i]) + " out of range [0, " +
                       std::to_string(n_) + ")");
    if (i > 0 && e[i] == e[i - 1])
      throw ParamError("edge repeats vertex " + std::to_string(e[i]));
  }
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) return;
  if (!partition_.empty()) {
    // Partition already fixed: the new edge must meet every part once.
    std::vector<char> seen(static_cast<size_t>(k_), 0);
    for (VertexId v : e) {
      int p = partition_[static_cast<size_t>(v)];
      if (seen[static_cast<size_t>(p)])
        throw ParamError("edge meets part " + std::to_string(p) + " twice");
      seen[static_cast<size_t>(p)] = 1;
    }
  }
  edges_.insert(it, std::move(e));
  incidence_fresh_ = false;
}

void Hypergraph::remove_edge(const Edge& e) {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return;
  edges_.erase(it);
  incidence_fresh_ = false;
}

bool Hypergraph::has_edge(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

int Hypergraph::edge_index(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

const std::vector<int>& Hypergraph::incident_edges(VertexId v) const {
  if (!incidence_fresh_) {
    incidence_.assign(static_cast<size_t>(n_), {});
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i)
      for (VertexId u : edges_[static_cast<size_t>(i)])
        incidence_[static_cast<size_t>(u)].push_back(i);
    incidence_fresh_ = true;
  }
  return incidence_[static_cast<size_t>(v)];
}

void Hypergraph::set_partition(std::vector<int> parts) {
  if (static_cast<int>(parts.size()) != n_)
    throw ParamError("partition size " + std::to_string(parts.size()) +
                     " does not match vertex count " + std::to_string(n_));
  for (int p : parts)
    if (p < 0 || p >= k_)
      throw ParamError("part label " + std::to_string(p) + " out of range [0, " +
                       std::to_string(k_) + ")");
  for (const Edge& e : edges_) {
    std::vector<char> seen(static_cast<size_t>(k_), 0);
    for (VertexId v : e) {
      int p = parts[static_cast<size_t>(v)];
      if (seen[static_cast<size_t>(p)])
        throw ParamError("partition puts two vertices of an edge in part " + std::to_string(p));
      seen[static_cast<size_t>(p)] = 1;
    }
  }
  partition_ = std::move(parts);
}

namespace {

// Precomputed placement schedule plus scratch space for one enumeration run.
struct HomSearch {
  const Hypergraph& H;
  const Hypergraph& X;
  HomOptions opts;
  const HomVisitor& visit;

  std::vector<int> order;                   // pattern vertices, placement order
  std::vector<int> anchor;                  // pattern edge supplying candidates, -1 if none
  std::vector<std::vector<int>> completed;  // pattern edges fully placed at each step
  HomMap image;
  std::vector<char> used;  // host vertex already an image (injective mode)
  bool part_filter = false;
  bool stopped = false;

  HomSearch(const Hypergraph& h, const Hypergraph& x, const HomOptions& o,
            const HomVisitor& v)
      : H(h), X(x), opts(o), visit(v) {}

  bool edge_image_ok(int ei) const {
    Edge img(static_cast<size_t>(H.k()));
    const Edge& pe = H.edge(ei);
    for (int j = 0; j < H.k(); ++j) img[static_cast<size_t>(j)] = image[static_cast<size_t>(pe[static_cast<size_t>(j)])];
    std::sort(img.begin(), img.end());
    for (size_t j = 1; j < img.size(); ++j)
      if (img[j] == img[j - 1]) return false;  // image set degenerate
    return X.has_edge(img);
  }

  bool part_ok(VertexId pattern_v, VertexId host_v) const {
    if (!part_filter) return true;
    int want = H.part_of(pattern_v);
    return want < 0 || X.part_of(host_v) == want;
  }

  void run(int pos) {
    if (stopped) return;
    if (pos == static_cast<int>(order.size())) {
      if (!visit(image)) stopped = true;
      return;
    }
    VertexId u = order[static_cast<size_t>(pos)];
    int ae = anchor[static_cast<size_t>(pos)];
    if (ae >= 0) {
      // Host edges containing the already-placed images of the anchor edge
      // supply the candidates. Scan the incidence list of the rarest image.
      const Edge& pe = H.edge(ae);
      std::vector<VertexId> placed;
      for (VertexId w : pe)
        if (w != u && image[static_cast<size_t>(w)] != kUnassigned)
          placed.push_back(image[static_cast<size_t>(w)]);
      // Two placed vertices of one edge sharing an image can never extend.
      std::sort(placed.begin(), placed.end());
      for (size_t j = 1; j < placed.size(); ++j)
        if (placed[j] == placed[j - 1]) return;
      VertexId rare = placed[0];
      for (VertexId p : placed)
        if (X.degree(p) < X.degree(rare)) rare = p;
      std::vector<VertexId> cands;
      for (int xe : X.incident_edges(rare)) {
        const Edge& he = X.edge(xe);
        bool all_in = true;
        for (VertexId p : placed)
          if (!std::binary_search(he.begin(), he.end(), p)) { all_in = false; break; }
        if (!all_in) continue;
        for (VertexId c : he)
          if (!std::binary_search(placed.begin(), placed.end(), c)) cands.push_back(c);
      }
      std::sort(cands.begin(), cands.end());
      cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
      for (VertexId c : cands) {
        try_candidate(pos, u, c);
        if (stopped) return;
      }
    } else {
      // No placed neighbor (isolated vertex or new component): every host
      // vertex is a candidate.
      for (VertexId c = 0; c < X.n_vertices(); ++c) {
        try_candidate(pos, u, c);
        if (stopped) return;
      }
    }
  }

  void try_candidate(int pos, VertexId u, VertexId c) {
    if (opts.injective && used[static_cast<size_t>(c)]) return;
    if (!part_ok(u, c)) return;
    image[static_cast<size_t>(u)] = c;
    bool ok = true;
    for (int ei : completed[static_cast<size_t>(pos)])
      if (!edge_image_ok(ei)) { ok = false; break; }
    if (ok) {
      if (opts.injective) used[static_cast<size_t>(c)] = 1;
      run(pos + 1);
      if (opts.injective) used[static_cast<size_t>(c)] = 0;
    }
    image[static_cast<size_t>(u)] = kUnassigned;
  }
};

}  // namespace

void enumerate_homs(const Hypergraph& H, const Hypergraph& X, const HomMap& pinned,
                    const HomOptions& opts, const HomVisitor& visit) {
  if (H.k() != X.k())
    throw ParamError("arity mismatch: pattern k=" + std::to_string(H.k()) + ", host k=" +
                     std::to_string(X.k()));
  if (H.n_vertices() == 0) {
    visit({});
    return;
  }
  HomSearch s(H, X, opts, visit);
  s.part_filter =
      opts.respect_partition && H.has_partition() && X.has_partition();
  s.image.assign(static_cast<size_t>(H.n_vertices()), kUnassigned);
  s.used.assign(static_cast<size_t>(X.n_vertices()), 0);

  if (!pinned.empty()) {
    if (pinned.size() != static_cast<size_t>(H.n_vertices()))
      throw ParamError("pinned map size must equal pattern vertex count");
    for (VertexId v = 0; v < H.n_vertices(); ++v) {
      VertexId img = pinned[static_cast<size_t>(v)];
      if (img == kUnassigned) continue;
      if (img < 0 || img >= X.n_vertices())
        throw ParamError("pinned image " + std::to_string(img) + " out of host range");
      if (!s.part_ok(v, img)) return;
      if (opts.injective) {
        if (s.used[static_cast<size_t>(img)]) return;  // two pins collide
        s.used[static_cast<size_t>(img)] = 1;
      }
      s.image[static_cast<size_t>(v)] = img;
    }
  }

  // Placement order: repeatedly take the unplaced vertex whose best edge has
  // the most placed vertices, so candidate sets stay as constrained as
  // possible. Ties break toward low ids for determinism.
  int n = H.n_vertices();
  std::vector<char> placed(static_cast<size_t>(n), 0);
  for (VertexId v = 0; v < n; ++v)
    if (s.image[static_cast<size_t>(v)] != kUnassigned) placed[static_cast<size_t>(v)] = 1;
  std::vector<char> edge_done(static_cast<size_t>(H.n_edges()), 0);
  // Edges entirely inside the pinned set are checked once, up front.
  for (int ei = 0; ei < H.n_edges(); ++ei) {
    bool full = true;
    for (VertexId w : H.edge(ei))
      if (!placed[static_cast<size_t>(w)]) { full = false; break; }
    if (full) {
      edge_done[static_cast<size_t>(ei)] = 1;
      if (!s.edge_image_ok(ei)) return;
    }
  }
  int remaining = 0;
  for (VertexId v = 0; v < n; ++v)
    if (!placed[static_cast<size_t>(v)]) ++remaining;
  while (remaining > 0) {
    VertexId best_v = -1;
    int best_count = -1, best_edge = -1;
    for (VertexId v = 0; v < n; ++v) {
      if (placed[static_cast<size_t>(v)]) continue;
      int v_count = -1, v_edge = -1;
      for (int ei : H.incident_edges(v)) {
        int cnt = 0;
        for (VertexId w : H.edge(ei))
          if (w != v && placed[static_cast<size_t>(w)]) ++cnt;
        if (cnt > v_count) { v_count = cnt; v_edge = ei; }
      }
      if (v_count > best_count) { best_count = v_count; best_v = v; best_edge = v_edge; }
    }
    s.order.push_back(best_v);
    s.anchor.push_back(best_count > 0 ? best_edge : -1);
    placed[static_cast<size_t>(best_v)] = 1;
    --remaining;
    std::vector<int> done_now;
    for (int ei : H.incident_edges(best_v)) {
      if (edge_done[static_cast<size_t>(ei)]) continue;
      bool full = true;
      for (VertexId w : H.edge(ei))
        if (!placed[static_cast<size_t>(w)]) { full = false; break; }
      if (full) { edge_done[static_cast<size_t>(ei)] = 1; done_now.push_back(ei); }
    }
    s.completed.push_back(std::move(done_now));
  }
  s.run(0);
}

void enumerate_inj(const Hypergraph& H, const Hypergraph& X, const HomMap& pinned,
                   const HomOptions& opts, const HomVisitor& visit) {
  HomOptions o = opts;
  o.injective = true;
  enumerate_homs(H, X, pinned, o, visit);
}

std::uint64_t count_homs(const Hypergraph& H, const Hypergraph& X, const HomMap& pinned,
                         HomOptions opts) {
  std::uint64_t cnt = 0;
  enumerate_homs(H, X, pinned, opts, [&](const HomMap&) {
    ++cnt;
    return true;
  });
  return cnt;
}

std::uint64_t count_inj(const Hypergraph& H, const Hypergraph& X, const HomMap& pinned,
                        HomOptions opts) {
  opts.injective = true;
  return count_homs(H, X, pinned, opts);
}

std::vector<HomMap> all_homs(const Hypergraph& H, const Hypergraph& X, const HomMap& pinned,
                             HomOptions opts) {
  std::vector<HomMap> out;
  enumerate_homs(H, X, pinned, opts, [&](const HomMap& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::optional<ContainsWitness> contains_any(const Hypergraph& X,
                                            const std::vector<Hypergraph>& family) {
  for (int i = 0; i < static_cast<int>(family.size()); ++i) {
    std::optional<ContainsWitness> found;
    HomOptions opts;
    opts.injective = true;
    opts.respect_partition = false;
    enumerate_homs(family[static_cast<size_t>(i)], X, {}, opts, [&](const HomMap& m) {
      found = ContainsWitness{m, i};
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;
}

namespace {

// Iterated degree refinement. Vertices that any isomorphism could exchange
// end up in the same class; only within-class relabelings are searched.
// seed_colors lets the pinned variant give each root a unique color.
std::vector<int> refine_colors(const Hypergraph& G, std::vector<long long> seed) {
  int n = G.n_vertices();
  std::vector<int> color(static_cast<size_t>(n));
  {
    std::vector<long long> sorted = seed;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < n; ++v)
      color[static_cast<size_t>(v)] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), seed[static_cast<size_t>(v)]) -
          sorted.begin());
  }
  for (int round = 0; round < n; ++round) {
    // Signature of v: current color plus the sorted list of incident-edge
    // color multisets.
    std::vector<std::vector<int>> sig(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<std::vector<int>> edge_sigs;
      for (int ei : G.incident_edges(v)) {
        std::vector<int> es;
        for (VertexId w : G.edge(ei))
          if (w != v) es.push_back(color[static_cast<size_t>(w)]);
        std::sort(es.begin(), es.end());
        edge_sigs.push_back(std::move(es));
      }
      std::sort(edge_sigs.begin(), edge_sigs.end());
      std::vector<int> flat{color[static_cast<size_t>(v)]};
      for (const auto& es : edge_sigs) {
        flat.push_back(-1);  // separator
        flat.insert(flat.end(), es.begin(), es.end());
      }
      sig[static_cast<size_t>(v)] = std::move(flat);
    }
    std::vector<std::vector<int>> uniq = sig;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<int> next(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v)
      next[static_cast<size_t>(v)] = static_cast<int>(
          std::lower_bound(uniq.begin(), uniq.end(), sig[static_cast<size_t>(v)]) - uniq.begin());
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

std::string encode_relabeled(const Hypergraph& G, const std::vector<int>& newid) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(G.n_edges()));
  for (const Edge& e : G.edges()) {
    Edge r;
    r.reserve(e.size());
    for (VertexId v : e) r.push_back(newid[static_cast<size_t>(v)]);
    std::sort(r.begin(), r.end());
    edges.push_back(std::move(r));
  }
  std::sort(edges.begin(), edges.end());
  std::string out;
  out.reserve(4 + edges.size() * static_cast<size_t>(G.k()));
  out.push_back(static_cast<char>(G.k()));
  out.push_back(static_cast<char>(G.n_vertices()));
  for (const Edge& e : edges)
    for (VertexId v : e) out.push_back(static_cast<char>(v));
  return out;
}

std::string canonical_impl(const Hypergraph& G, int n_pinned, int max_vertices) {
  int n = G.n_vertices();
  if (n > max_vertices)
    throw LimitError("canonicalization limit is " + std::to_string(max_vertices) +
                         " vertices, graph has " + std::to_string(n),
                     static_cast<std::uint64_t>(max_vertices), static_cast<std::uint64_t>(n));
  if (n_pinned < 0 || n_pinned > n)
    throw ParamError("pinned prefix " + std::to_string(n_pinned) + " out of range");

  std::vector<long long> seed(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    if (v < n_pinned)
      seed[static_cast<size_t>(v)] = -1000 - v;  // unique color per root
    else
      seed[static_cast<size_t>(v)] = G.degree(v);
  }
  std::vector<int> color = refine_colors(G, std::move(seed));

  // Group the free vertices by color; each class gets a contiguous target id
  // range (in color order), and we take the minimum encoding over the
  // product of within-class permutations.
  int max_color = 0;
  for (int c : color) max_color = std::max(max_color, c);
  std::vector<std::vector<int>> classes(static_cast<size_t>(max_color + 1));
  for (int v = n_pinned; v < n; ++v) classes[static_cast<size_t>(color[static_cast<size_t>(v)])].push_back(v);
  std::vector<std::vector<int>> groups;
  for (auto& cl : classes)
    if (!cl.empty()) groups.push_back(std::move(cl));

  std::vector<int> newid(static_cast<size_t>(n), -1);
  for (int v = 0; v < n_pinned; ++v) newid[static_cast<size_t>(v)] = v;

  std::string best;
  bool have_best = false;
  // Recursive product of per-group permutations; groups are tiny after
  // refinement so this stays far from the factorial worst case.
  std::function<void(size_t, int)> assign = [&](size_t gi, int next_id) {
    if (gi == groups.size()) {
      std::string enc = encode_relabeled(G, newid);
      if (!have_best || enc < best) { best = std::move(enc); have_best = true; }
      return;
    }
    std::vector<int>& grp = groups[gi];
    std::sort(grp.begin(), grp.end());
    std::vector<int> perm = grp;
    do {
      for (size_t j = 0; j < perm.size(); ++j)
        newid[static_cast<size_t>(perm[j])] = next_id + static_cast<int>(j);
      assign(gi + 1, next_id + static_cast<int>(perm.size()));
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (int v : grp) newid[static_cast<size_t>(v)] = -1;
  };
  assign(0, n_pinned);
  return best;
}

}  // namespace

std::string canonical_form(const Hypergraph& G, int max_vertices) {
  return canonical_impl(G, 0, max_vertices);
}

std::string canonical_form_pinned(const Hypergraph& G, int n_pinned, int max_vertices) {
  return canonical_impl(G, n_pinned, max_vertices);
}

}  // namespace turan

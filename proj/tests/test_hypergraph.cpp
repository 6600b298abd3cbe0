#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest/doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "turan/errors.hpp"
#include "turan/hypergraph.hpp"
#include "turan/rng.hpp"

using namespace turan;

namespace {

Hypergraph make_graph(int k, int n, std::initializer_list<Edge> edges) {
  Hypergraph g(k, n);
  for (const Edge& e : edges) g.add_edge(e);
  return g;
}

Hypergraph random_graph(int k, int n, double density, std::uint64_t seed) {
  Hypergraph g(k, n);
  Rng rng(seed);
  std::vector<int> idx(static_cast<size_t>(k));
  // Walk all k-subsets in lex order, keeping each with the given density.
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    if (rng.uniform01() < density) g.add_edge(Edge(idx.begin(), idx.end()));
    int i = k - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
  return g;
}

// Reference hom counter: try all |X|^|H| maps.
std::uint64_t brute_homs(const Hypergraph& H, const Hypergraph& X, bool injective,
                         const HomMap& pinned = {}) {
  const int h = H.n_vertices();
  const int x = X.n_vertices();
  std::uint64_t total = 0;
  std::vector<VertexId> map(static_cast<size_t>(h), 0);
  const auto ok = [&] {
    if (!pinned.empty()) {
      for (int v = 0; v < h; ++v) {
        if (pinned[static_cast<size_t>(v)] != kUnassigned &&
            pinned[static_cast<size_t>(v)] != map[static_cast<size_t>(v)]) {
          return false;
        }
      }
    }
    if (injective) {
      std::set<VertexId> seen(map.begin(), map.end());
      if (static_cast<int>(seen.size()) != h) return false;
    }
    if (H.has_partition() && X.has_partition()) {
      for (int v = 0; v < h; ++v) {
        if (H.part_of(v) != X.part_of(map[static_cast<size_t>(v)])) return false;
      }
    }
    for (const Edge& e : H.edges()) {
      Edge img;
      for (VertexId v : e) img.push_back(map[static_cast<size_t>(v)]);
      std::sort(img.begin(), img.end());
      if (std::adjacent_find(img.begin(), img.end()) != img.end()) return false;
      if (!X.has_edge(img)) return false;
    }
    return true;
  };
  for (;;) {
    if (ok()) ++total;
    int i = h - 1;
    while (i >= 0 && map[static_cast<size_t>(i)] == x - 1) --i;
    if (i < 0) break;
    ++map[static_cast<size_t>(i)];
    for (int j = i + 1; j < h; ++j) map[static_cast<size_t>(j)] = 0;
  }
  return total;
}

// Reference canonical comparison: isomorphic iff some vertex bijection maps
// edge set onto edge set. Only for tiny n.
bool brute_isomorphic(const Hypergraph& A, const Hypergraph& B) {
  if (A.n_vertices() != B.n_vertices() || A.n_edges() != B.n_edges() || A.k() != B.k()) {
    return false;
  }
  std::vector<int> perm(static_cast<size_t>(A.n_vertices()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool all = true;
    for (const Edge& e : A.edges()) {
      Edge img;
      for (VertexId v : e) img.push_back(perm[static_cast<size_t>(v)]);
      std::sort(img.begin(), img.end());
      if (!B.has_edge(img)) {
        all = false;
        break;
      }
    }
    if (all) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("edges are stored sorted, deduplicated, in lex order") {
  Hypergraph g(3, 6);
  g.add_edge({5, 2, 0});
  g.add_edge({1, 2, 3});
  g.add_edge({0, 2, 5});  // duplicate of the first, different input order
  CHECK(g.n_edges() == 2);
  CHECK(g.edge(0) == Edge{0, 2, 5});
  CHECK(g.edge(1) == Edge{1, 2, 3});
  CHECK(g.has_edge({0, 2, 5}));
  CHECK(g.edge_index({1, 2, 3}) == 1);
  CHECK(g.edge_index({0, 1, 2}) == -1);

  g.remove_edge({0, 2, 5});
  CHECK(g.n_edges() == 1);
  CHECK_FALSE(g.has_edge({0, 2, 5}));
  g.remove_edge({0, 2, 5});  // removing again is a no-op
  CHECK(g.n_edges() == 1);
}

TEST_CASE("invalid edges are rejected") {
  Hypergraph g(2, 3);
  CHECK_THROWS_AS(g.add_edge({0, 0}), ParamError);
  CHECK_THROWS_AS(g.add_edge({0, 3}), ParamError);
  CHECK_THROWS_AS(g.add_edge({0, 1, 2}), ParamError);
}

TEST_CASE("incidence and degree track mutations") {
  Hypergraph g = make_graph(2, 4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(3) == 1);
  CHECK(g.incident_edges(2) == std::vector<int>{1, 2});
  g.remove_edge({1, 2});
  CHECK(g.degree(1) == 1);
  CHECK(g.degree(2) == 1);
}

TEST_CASE("partition must cross every edge once") {
  Hypergraph g = make_graph(2, 4, {{0, 1}, {2, 3}});
  g.set_partition({0, 1, 0, 1});
  CHECK(g.part_of(2) == 0);
  // {0, 2} would lie inside part 0
  CHECK_THROWS_AS(g.add_edge({0, 2}), ParamError);
  Hypergraph h = make_graph(2, 4, {{0, 2}});
  CHECK_THROWS_AS(h.set_partition({0, 1, 0, 1}), ParamError);
  CHECK_THROWS_AS(h.set_partition({0, 1}), ParamError);
}

TEST_CASE("hom counts match the exhaustive reference") {
  // cherry into triangle: 3 choices for the middle, 2 x 2 for the leaves
  Hypergraph cherry = make_graph(2, 3, {{0, 1}, {0, 2}});
  Hypergraph triangle = make_graph(2, 3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(count_homs(cherry, triangle) == 12);
  CHECK(count_inj(cherry, triangle) == 6);
  CHECK(brute_homs(cherry, triangle, false) == 12);

  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    Hypergraph H = random_graph(2, 4, 0.6, seed);
    Hypergraph X = random_graph(2, 6, 0.5, seed + 100);
    CHECK(count_homs(H, X) == brute_homs(H, X, false));
    CHECK(count_inj(H, X) == brute_homs(H, X, true));
  }
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    Hypergraph H = random_graph(3, 4, 0.7, seed);
    Hypergraph X = random_graph(3, 6, 0.4, seed + 200);
    CHECK(count_homs(H, X) == brute_homs(H, X, false));
    CHECK(count_inj(H, X) == brute_homs(H, X, true));
  }
}

TEST_CASE("pinned slots constrain enumeration") {
  Hypergraph cherry = make_graph(2, 3, {{0, 1}, {0, 2}});
  Hypergraph triangle = make_graph(2, 3, {{0, 1}, {0, 2}, {1, 2}});
  HomMap pinned(3, kUnassigned);
  pinned[0] = 1;  // middle fixed; each leaf still has 2 neighbors
  CHECK(count_homs(cherry, triangle, pinned) == 4);
  CHECK(brute_homs(cherry, triangle, false, pinned) == 4);
  pinned[1] = 0;
  CHECK(count_homs(cherry, triangle, pinned) == 2);

  // every visited map extends the constraint
  enumerate_homs(cherry, triangle, pinned, {}, [&](const HomMap& m) {
    CHECK(m[0] == 1);
    CHECK(m[1] == 0);
    return true;
  });
}

TEST_CASE("partition labels restrict images when both sides carry them") {
  Hypergraph edge = make_graph(2, 2, {{0, 1}});
  edge.set_partition({0, 1});
  Hypergraph host = make_graph(2, 4, {{0, 1}, {0, 3}, {2, 1}, {2, 3}});
  host.set_partition({0, 1, 0, 1});
  // 4 edges x 2 orientations without labels, x 1 orientation with them
  CHECK(count_homs(edge, host) == 4);
  HomOptions label_free;
  label_free.respect_partition = false;
  CHECK(count_homs(edge, host, {}, label_free) == 8);
}

TEST_CASE("all_homs agrees with count and contains no duplicates") {
  Hypergraph H = random_graph(2, 4, 0.7, 11);
  Hypergraph X = random_graph(2, 5, 0.6, 12);
  std::vector<HomMap> homs = all_homs(H, X);
  CHECK(homs.size() == count_homs(H, X));
  std::set<HomMap> unique(homs.begin(), homs.end());
  CHECK(unique.size() == homs.size());
}

TEST_CASE("containment is label-free, injective, and monotone under edge additions") {
  Hypergraph cherry = make_graph(2, 3, {{0, 1}, {0, 2}});
  Hypergraph host(2, 5);
  CHECK_FALSE(contains_any(host, {cherry}).has_value());
  host.add_edge({0, 1});
  CHECK_FALSE(contains_any(host, {cherry}).has_value());  // one edge, no cherry
  host.add_edge({1, 2});
  auto w = contains_any(host, {cherry});
  REQUIRE(w.has_value());
  CHECK(w->member == 0);
  // the witness really is a cherry: middle adjacent to both leaves
  Edge e1{w->map[0], w->map[1]}, e2{w->map[0], w->map[2]};
  std::sort(e1.begin(), e1.end());
  std::sort(e2.begin(), e2.end());
  CHECK(host.has_edge(e1));
  CHECK(host.has_edge(e2));

  // once contained, always contained as the host grows
  Rng rng(5);
  for (int step = 0; step < 10; ++step) {
    Edge e{static_cast<VertexId>(rng.uniform_below(5)), 0};
    e[1] = static_cast<VertexId>((e[0] + 1 + rng.uniform_below(4)) % 5);
    std::sort(e.begin(), e.end());
    host.add_edge(e);
    CHECK(contains_any(host, {cherry}).has_value());
  }
}

TEST_CASE("canonical form agrees with brute-force isomorphism on small graphs") {
  Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    Hypergraph A = random_graph(2, 5, 0.5, 1000 + static_cast<std::uint64_t>(trial));
    Hypergraph B = random_graph(2, 5, 0.5, 2000 + static_cast<std::uint64_t>(trial));
    CHECK((canonical_form(A) == canonical_form(B)) == brute_isomorphic(A, B));
  }
  for (int trial = 0; trial < 20; ++trial) {
    Hypergraph A = random_graph(3, 6, 0.3, 3000 + static_cast<std::uint64_t>(trial));
    Hypergraph B = random_graph(3, 6, 0.3, 4000 + static_cast<std::uint64_t>(trial));
    CHECK((canonical_form(A) == canonical_form(B)) == brute_isomorphic(A, B));
  }
}

TEST_CASE("canonical form is invariant under relabeling") {
  Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    Hypergraph A = random_graph(2, 6, 0.5, 5000 + static_cast<std::uint64_t>(trial));
    std::vector<int> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = 5; i > 0; --i) {
      std::swap(perm[static_cast<size_t>(i)],
                perm[static_cast<size_t>(rng.uniform_below(static_cast<std::uint64_t>(i + 1)))]);
    }
    Hypergraph B(2, 6);
    for (const Edge& e : A.edges()) {
      B.add_edge({perm[static_cast<size_t>(e[0])], perm[static_cast<size_t>(e[1])]});
    }
    CHECK(canonical_form(A) == canonical_form(B));
  }
}

TEST_CASE("pinned canonical form distinguishes where the pin breaks symmetry") {
  // two paths on 3 vertices: pinned vertex 0 is a leaf in both
  Hypergraph leaf1 = make_graph(2, 3, {{0, 1}, {1, 2}});
  Hypergraph leaf2 = make_graph(2, 3, {{0, 2}, {1, 2}});
  // path again, but the pinned vertex is the middle
  Hypergraph mid = make_graph(2, 3, {{0, 1}, {0, 2}});

  CHECK(canonical_form(leaf1) == canonical_form(mid));  // all are P3 unpinned
  CHECK(canonical_form_pinned(leaf1, 1) == canonical_form_pinned(leaf2, 1));
  CHECK(canonical_form_pinned(leaf1, 1) != canonical_form_pinned(mid, 1));

  // pinning everything reduces equality to identity of edge sets
  CHECK(canonical_form_pinned(leaf1, 3) != canonical_form_pinned(leaf2, 3));
  CHECK(canonical_form_pinned(leaf1, 0) == canonical_form(leaf1));
}

TEST_CASE("enumeration can stop early") {
  Hypergraph cherry = make_graph(2, 3, {{0, 1}, {0, 2}});
  Hypergraph K4 = random_graph(2, 4, 1.1, 1);  // density > 1 keeps every edge
  int seen = 0;
  enumerate_homs(cherry, K4, {}, {}, [&](const HomMap&) {
    ++seen;
    return seen < 5;
  });
  CHECK(seen == 5);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest/doctest.h>

#include <algorithm>
#include <functional>
#include <map>

#include "turan/errors.hpp"
#include "turan/lifting.hpp"
#include "turan/rng.hpp"

using namespace turan;

namespace {

Hypergraph make_graph(int k, int n, std::initializer_list<Edge> edges) {
  Hypergraph g(k, n);
  for (const Edge& e : edges) g.add_edge(e);
  return g;
}

// 2-uniform path on 4 vertices; the smallest base member with two disjoint
// edges.
Hypergraph p3() { return make_graph(2, 4, {{0, 1}, {1, 2}, {2, 3}}); }

LiftedFamilySpec p3_spec() {
  LiftedFamilySpec spec;
  spec.k = 3;
  spec.l = 2;
  spec.base = {p3()};
  return spec;
}

// Reference predicate straight from the defining property: some <= l+2
// edges intersect in fewer than k-l common vertices, or the residue of a
// (k-l)-subset of the common intersection contains a base member.
bool naive_free(const Hypergraph& G, const LiftedFamilySpec& spec) {
  const int need = spec.k - spec.l;
  const int m = G.n_edges();
  // subsets of up to l+2 edges, checked by common intersection size
  std::vector<int> pick;
  const std::function<bool(int)> scan = [&](int first) {
    if (pick.size() >= 2) {
      std::vector<VertexId> common = G.edge(pick[0]);
      for (size_t i = 1; i < pick.size(); ++i) {
        std::vector<VertexId> next;
        std::set_intersection(common.begin(), common.end(), G.edge(pick[i]).begin(),
                              G.edge(pick[i]).end(), std::back_inserter(next));
        common = next;
      }
      if (static_cast<int>(common.size()) < need) return true;
    }
    if (static_cast<int>(pick.size()) == spec.l + 2) return false;
    for (int e = first; e < m; ++e) {
      pick.push_back(e);
      if (scan(e + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  if (scan(0)) return false;

  if (m == 0) return true;
  std::vector<VertexId> common = G.edge(0);
  for (int e = 1; e < m; ++e) {
    std::vector<VertexId> next;
    std::set_intersection(common.begin(), common.end(), G.edge(e).begin(), G.edge(e).end(),
                          std::back_inserter(next));
    common = next;
  }
  // residues of every (k-l)-subset of the common core
  std::vector<int> idx(static_cast<size_t>(need));
  const std::function<bool(size_t, size_t)> subsets = [&](size_t pos, size_t start) {
    if (pos == idx.size()) {
      std::vector<VertexId> S;
      for (size_t i : idx) S.push_back(common[i]);
      std::sort(S.begin(), S.end());
      std::map<VertexId, VertexId> remap;
      std::vector<Edge> residue;
      for (const Edge& e : G.edges()) {
        Edge r;
        for (VertexId v : e) {
          if (!std::binary_search(S.begin(), S.end(), v)) r.push_back(v);
        }
        for (VertexId v : r) remap.emplace(v, static_cast<VertexId>(remap.size()));
        for (VertexId& v : r) v = remap[v];
        residue.push_back(r);
      }
      Hypergraph R(spec.l, static_cast<int>(remap.size()));
      for (Edge& e : residue) R.add_edge(e);
      if (contains_any(R, spec.base).has_value()) return true;
      return false;
    }
    for (size_t i = start; i < common.size(); ++i) {
      idx[pos] = i;
      if (subsets(pos + 1, i + 1)) return true;
    }
    return false;
  };
  if (subsets(0, 0)) return false;
  return true;
}

}  // namespace

TEST_CASE("lifted family validation") {
  CHECK_NOTHROW(p3_spec().validate());

  LiftedFamilySpec same_arity = p3_spec();
  same_arity.k = 2;
  CHECK_THROWS_AS(same_arity.validate(), ParamError);

  // the cherry has no pair of disjoint edges
  LiftedFamilySpec cherry_base = p3_spec();
  cherry_base.base = {make_graph(2, 3, {{0, 1}, {1, 2}})};
  CHECK_THROWS_AS(cherry_base.validate(), ParamError);

  LiftedFamilySpec wrong_arity = p3_spec();
  wrong_arity.base = {make_graph(3, 6, {{0, 1, 2}, {3, 4, 5}})};
  CHECK_THROWS_AS(wrong_arity.validate(), ParamError);

  LiftedFamilySpec empty = p3_spec();
  empty.base.clear();
  CHECK_THROWS_AS(empty.validate(), ParamError);
}

TEST_CASE("lifting a member appends shared apexes") {
  const Hypergraph lifted = lift_member(p3(), 3);
  CHECK(lifted.k() == 3);
  CHECK(lifted.n_vertices() == 5);
  CHECK(lifted.n_edges() == 3);
  for (const Edge& e : lifted.edges()) {
    CHECK(std::find(e.begin(), e.end(), 4) != e.end());  // apex rides every edge
  }

  const Hypergraph doubled = lift_member(p3(), 4);
  CHECK(doubled.n_vertices() == 6);
  for (const Edge& e : doubled.edges()) {
    CHECK(std::find(e.begin(), e.end(), 4) != e.end());
    CHECK(std::find(e.begin(), e.end(), 5) != e.end());
  }

  const Hypergraph single = lift_member(make_graph(2, 2, {{0, 1}}), 3);
  CHECK(single.n_edges() == 1);
  CHECK(single.edge(0) == Edge{0, 1, 2});
}

TEST_CASE("freeness round-trips through the lift for every small base graph") {
  const LiftedFamilySpec spec = p3_spec();
  const std::vector<Hypergraph> base_family = {p3()};
  // all 2-uniform graphs on 5 labeled vertices
  std::vector<Edge> pairs;
  for (VertexId u = 0; u < 5; ++u) {
    for (VertexId v = u + 1; v < 5; ++v) pairs.push_back({u, v});
  }
  int lifted_free = 0;
  for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
    Hypergraph G(2, 5);
    for (size_t i = 0; i < pairs.size(); ++i) {
      if (mask & (1u << i)) G.add_edge(pairs[i]);
    }
    const bool base_free = !contains_any(G, base_family).has_value();
    const bool lift_free = lifted_freeness_check(lift_member(G, 3), spec);
    CAPTURE(mask);
    REQUIRE(base_free == lift_free);
    lifted_free += lift_free ? 1 : 0;
  }
  CHECK(lifted_free > 0);
  CHECK(lifted_free < 1 << 10);
}

TEST_CASE("wrong-form witnesses: edges with a small common core") {
  const LiftedFamilySpec spec = p3_spec();
  // two disjoint edges share nothing
  CHECK_FALSE(lifted_freeness_check(make_graph(3, 6, {{0, 1, 2}, {3, 4, 5}}), spec));
  // pairwise overlaps but empty total intersection, caught at 3 <= l+2 edges
  CHECK_FALSE(lifted_freeness_check(
      make_graph(3, 6, {{0, 1, 2}, {1, 2, 3}, {0, 4, 5}}), spec));
  // a sunflower with a full-size kernel is fine until its residue fills up
  CHECK(lifted_freeness_check(build_sunflower(3, 1, 7), spec));
}

TEST_CASE("freeness agrees with the reference predicate") {
  const LiftedFamilySpec spec = p3_spec();
  Rng rng(5);
  int free_seen = 0;
  int caught = 0;
  for (int trial = 0; trial < 400; ++trial) {
    // mix kernel-sharing hosts (which exercise the residue branch) with
    // unstructured ones (which mostly die on the intersection branch)
    Hypergraph G(3, 7);
    const bool kernelled = trial % 2 == 0;
    const int edges = 1 + static_cast<int>(rng.uniform_below(5));
    for (int e = 0; e < edges; ++e) {
      Edge edge;
      if (kernelled) edge.push_back(0);
      while (edge.size() < 3) {
        const VertexId v =
            static_cast<VertexId>((kernelled ? 1 : 0) + rng.uniform_below(kernelled ? 6 : 7));
        if (std::find(edge.begin(), edge.end(), v) == edge.end()) edge.push_back(v);
      }
      std::sort(edge.begin(), edge.end());
      G.add_edge(edge);
    }
    const bool fast = lifted_freeness_check(G, spec);
    CAPTURE(trial);
    REQUIRE(fast == naive_free(G, spec));
    free_seen += fast ? 1 : 0;
    caught += fast ? 0 : 1;
  }
  // the sample must exercise both outcomes to mean anything
  CHECK(free_seen > 20);
  CHECK(caught > 20);
}

TEST_CASE("sunflowers intersect in exactly the kernel") {
  for (int k : {2, 3}) {
    for (int t = 0; t < k; ++t) {
      for (int n : {k + 1, 2 * k + 1, 9}) {
        const Hypergraph sf = build_sunflower(k, t, n);
        CAPTURE(k);
        CAPTURE(t);
        CAPTURE(n);
        const int petals = (n - t) / (k - t);
        CHECK(sf.n_edges() == petals);
        Edge kernel;
        for (VertexId v = 0; v < t; ++v) kernel.push_back(v);
        for (int i = 0; i < sf.n_edges(); ++i) {
          for (int j = i + 1; j < sf.n_edges(); ++j) {
            Edge common;
            std::set_intersection(sf.edge(i).begin(), sf.edge(i).end(), sf.edge(j).begin(),
                                  sf.edge(j).end(), std::back_inserter(common));
            CHECK(common == kernel);
          }
        }
      }
    }
  }
  CHECK_THROWS_AS(build_sunflower(3, 3, 9), ParamError);   // t must stay below k
  CHECK_THROWS_AS(build_sunflower(3, 1, 2), ParamError);   // n too small
}

TEST_CASE("sunflowers dodge any family of larger members") {
  // pigeonhole: a member with more edges than the sunflower cannot embed
  const Hypergraph sf = build_sunflower(3, 2, 8);  // 6 petals, 6 edges
  REQUIRE(sf.n_edges() == 6);
  Hypergraph big(3, 10);
  for (int i = 0; i + 3 <= 10; ++i) {
    big.add_edge({i, i + 1, i + 2});
  }
  REQUIRE(big.n_edges() > sf.n_edges());
  CHECK_FALSE(contains_any(sf, {big}).has_value());
}

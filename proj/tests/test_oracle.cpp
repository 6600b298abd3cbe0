#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest/doctest.h>

#include <algorithm>

#include "turan/errors.hpp"
#include "turan/oracle.hpp"

using namespace turan;

namespace {

Hypergraph make_graph(int k, int n, std::initializer_list<Edge> edges) {
  Hypergraph g(k, n);
  for (const Edge& e : edges) g.add_edge(e);
  return g;
}

Hypergraph triangle() { return make_graph(2, 3, {{0, 1}, {1, 2}, {0, 2}}); }
Hypergraph cherry() { return make_graph(2, 3, {{0, 1}, {1, 2}}); }
Hypergraph p3() { return make_graph(2, 4, {{0, 1}, {1, 2}, {2, 3}}); }

LiftedFamilySpec p3_spec() {
  LiftedFamilySpec spec;
  spec.k = 3;
  spec.l = 2;
  spec.base = {p3()};
  return spec;
}

// The extremal value must come with a graph that attains it.
void check_witness(const ExResult& res, const std::vector<Hypergraph>& family, int n, int k) {
  CHECK(res.witness.k() == k);
  CHECK(res.witness.n_vertices() == n);
  CHECK(res.witness.n_edges() == res.value);
  CHECK_FALSE(contains_any(res.witness, family).has_value());
}

}  // namespace

TEST_CASE("triangle-free maxima follow n^2/4") {
  const std::vector<Hypergraph> family = {triangle()};
  const long long expect[] = {2, 4, 6, 9, 12};
  for (int n = 3; n <= 7; ++n) {
    const ExResult res = exact_ex(n, 2, family);
    CAPTURE(n);
    CHECK(res.value == expect[n - 3]);
    CHECK(res.exhaustive);  // C(7,2)=21 still under the default cutoff
    check_witness(res, family, n, 2);
  }
}

TEST_CASE("branch-and-bound mode reproduces the exhaustive values") {
  const std::vector<Hypergraph> family = {triangle()};
  ExOptions opts;
  opts.exhaustive_limit = 0;
  for (int n : {5, 6}) {
    const ExResult res = exact_ex(n, 2, family, opts);
    CAPTURE(n);
    CHECK(res.value == (n == 5 ? 6 : 9));
    CHECK_FALSE(res.exhaustive);
    check_witness(res, family, n, 2);
  }
}

TEST_CASE("cherry-free graphs are matchings") {
  const std::vector<Hypergraph> family = {cherry()};
  for (int n = 4; n <= 7; ++n) {
    const ExResult res = exact_ex(n, 2, family);
    CAPTURE(n);
    CHECK(res.value == n / 2);
    check_witness(res, family, n, 2);
  }
}

TEST_CASE("path-free maxima pack triangles and stars") {
  const std::vector<Hypergraph> family = {p3()};
  const long long expect[] = {3, 4, 6, 6};
  for (int n = 4; n <= 7; ++n) {
    const ExResult res = exact_ex(n, 2, family);
    CAPTURE(n);
    CHECK(res.value == expect[n - 4]);
    check_witness(res, family, n, 2);
  }
}

TEST_CASE("degenerate families") {
  // nothing forbidden: the complete graph wins
  CHECK(exact_ex(6, 2, {}).value == 15);
  CHECK(exact_ex(4, 3, {}).value == 4);
  // a single edge forbidden: nothing survives
  const Hypergraph edge2 = make_graph(2, 2, {{0, 1}});
  const Hypergraph edge3 = make_graph(3, 3, {{0, 1, 2}});
  for (int n = 2; n <= 6; ++n) CHECK(exact_ex(n, 2, {edge2}).value == 0);
  for (int n = 3; n <= 7; ++n) CHECK(exact_ex(n, 3, {edge3}).value == 0);
  // fewer vertices than the arity: no candidate edges at all
  const ExResult tiny = exact_ex(2, 3, {edge3});
  CHECK(tiny.value == 0);
  CHECK(tiny.witness.n_edges() == 0);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(exact_ex(5, 1, {}), ParamError);
  CHECK_THROWS_AS(exact_ex(-1, 2, {}), ParamError);
  CHECK_THROWS_AS(exact_ex(5, 3, {cherry()}), ParamError);  // arity mismatch
  CHECK_THROWS_AS(exact_ex(5, 2, {Hypergraph(2, 3)}), ParamError);  // edgeless member
  CHECK_THROWS_AS(lifting_identity_table(p3_spec(), 5, 4), ParamError);
}

TEST_CASE("forbidding more can only lower the maximum") {
  const long long loose = exact_ex(6, 2, {triangle()}).value;
  const long long tight = exact_ex(6, 2, {triangle(), cherry()}).value;
  CHECK(tight <= loose);
  CHECK(tight == 3);  // the cherry alone already forces a matching
}

TEST_CASE("repeated runs return the same witness") {
  const std::vector<Hypergraph> family = {triangle()};
  const ExResult a = exact_ex(5, 2, family);
  const ExResult b = exact_ex(5, 2, family);
  CHECK(a.value == b.value);
  CHECK(a.witness.edges() == b.witness.edges());
  CHECK(a.nodes == b.nodes);
}

TEST_CASE("exhausted budgets report the bracket proved so far") {
  ExOptions opts;
  opts.node_budget = 10;
  opts.exhaustive_limit = 0;
  try {
    exact_ex(7, 2, {triangle()}, opts);
    FAIL("budget of 10 nodes cannot finish a 21-candidate search");
  } catch (const BudgetError& e) {
    CHECK(e.lower_bound() >= 0);
    CHECK(e.lower_bound() <= 12);   // never above the true maximum
    CHECK(e.upper_bound() == 21);   // candidate count is the trivial cap
    CHECK(e.lower_bound() <= e.upper_bound());
  }
}

TEST_CASE("lifted search agrees with filtering every subgraph") {
  const LiftedFamilySpec spec = p3_spec();
  // all 3-uniform graphs on 5 vertices, 2^10 edge subsets
  std::vector<Edge> triples;
  for (VertexId u = 0; u < 5; ++u) {
    for (VertexId v = u + 1; v < 5; ++v) {
      for (VertexId w = v + 1; w < 5; ++w) triples.push_back({u, v, w});
    }
  }
  REQUIRE(triples.size() == 10);
  long long brute = 0;
  for (unsigned mask = 0; mask < (1u << 10); ++mask) {
    Hypergraph G(3, 5);
    for (size_t i = 0; i < triples.size(); ++i) {
      if (mask & (1u << i)) G.add_edge(triples[i]);
    }
    if (lifted_freeness_check(G, spec)) {
      brute = std::max(brute, static_cast<long long>(G.n_edges()));
    }
  }

  const ExResult res = exact_ex_lifted(5, spec);
  CHECK(res.value == brute);
  CHECK(res.witness.n_edges() == res.value);
  CHECK(lifted_freeness_check(res.witness, spec));
}

TEST_CASE("the lifted maxima match the base maxima row by row") {
  const LiftedFamilySpec spec = p3_spec();
  const std::vector<LiftIdentityRow> rows = lifting_identity_table(spec, 4, 6);
  REQUIRE(rows.size() == 3);
  for (size_t i = 0; i < rows.size(); ++i) {
    const LiftIdentityRow& row = rows[i];
    CAPTURE(row.n_base);
    CHECK(row.n_base == 4 + static_cast<int>(i));
    CHECK(row.ex_base == exact_ex(row.n_base, 2, spec.base).value);
    CHECK(row.ex_lifted == exact_ex_lifted(row.n_base + 1, spec).value);
    CHECK(row.equal == (row.ex_base == row.ex_lifted));
    CHECK(row.equal);
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest/doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "turan/entropy.hpp"
#include "turan/errors.hpp"
#include "turan/rng.hpp"

using namespace turan;

namespace {

Hypergraph make_graph(int k, int n, std::initializer_list<Edge> edges) {
  Hypergraph g(k, n);
  for (const Edge& e : edges) g.add_edge(e);
  return g;
}

Hypergraph random_host(int k, int n, double density, std::uint64_t seed) {
  Hypergraph g(k, n);
  Rng rng(seed);
  std::vector<int> idx(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
  for (;;) {
    if (rng.uniform01() < density) g.add_edge(Edge(idx.begin(), idx.end()));
    int i = k - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
  if (g.n_edges() == 0) g.add_edge(Edge(idx.begin(), idx.end()));
  return g;
}

}  // namespace

TEST_CASE("hypertree builders and order recovery") {
  const Hypertree edge = single_edge_tree(3);
  CHECK(edge.graph.n_edges() == 1);
  CHECK(edge.build_order.size() == 1);

  const Hypertree cherry = path_tree(2, 2);
  CHECK(cherry.graph.n_vertices() == 3);
  CHECK(cherry.graph.edges() == std::vector<Edge>{{0, 1}, {1, 2}});

  const Hypertree from_rooted = hypertree_from_rooted(build_tree({2, 2, 3}));
  CHECK_FALSE(from_rooted.graph.has_partition());
  CHECK(from_rooted.graph.n_edges() == 3);

  // recovery accepts any hypertree and rejects anything else
  const Hypertree rebuilt = derive_build_order(cherry.graph);
  CHECK(rebuilt.build_order.size() == 2);
  CHECK_THROWS_AS(derive_build_order(make_graph(2, 3, {{0, 1}, {0, 2}, {1, 2}})), ParamError);
  Hypergraph disconnected = make_graph(2, 4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(derive_build_order(disconnected), ParamError);
}

TEST_CASE("host profile and degree index") {
  const Hypergraph triangle = make_graph(2, 3, {{0, 1}, {0, 2}, {1, 2}});
  const HostProfile host = make_host_profile(triangle);
  CHECK(host.n == 3);
  CHECK(host.M == 6);  // 2 orientations x 3 edges
  CHECK(host.r_eff == doctest::Approx(2.0 - std::log(6.0) / std::log(3.0)));

  const DegIndex deg = build_deg_index(triangle);
  CHECK(deg.M == 6);
  CHECK(deg.deg_of({0}) == 2);
  CHECK(deg.deg_of({2}) == 2);

  const Hypergraph one3 = make_graph(3, 4, {{0, 1, 2}});
  const DegIndex deg3 = build_deg_index(one3);
  CHECK(deg3.M == 6);  // 3! orderings
  CHECK(deg3.deg_of({0, 1}) == 1);
  CHECK(deg3.deg_of({1, 0}) == 1);  // order irrelevant
  CHECK(deg3.deg_of({0, 3}) == 0);
}

TEST_CASE("mu on the cherry in the triangle") {
  const Hypertree cherry = path_tree(2, 2);
  const HostProfile host = make_host_profile(make_graph(2, 3, {{0, 1}, {0, 2}, {1, 2}}));
  const WeightedHomTable table = build_mu(cherry, host);
  REQUIRE(table.support.size() == 12);
  // first edge uniform over 6 ordered edges, extension uniform over the 2
  // edges at the middle image: every hom gets exactly 1/12
  for (const BigRat& w : table.weights) CHECK(w == BigRat(1, 12));

  CHECK(entropy_D(table) == doctest::Approx(std::log(27.0 / 12.0)));

  // deg is constant, so the slack in property (1) closes to zero
  const Property1Report p1 = verify_property1(table, host);
  CHECK(p1.pass);
  CHECK(p1.e_H == 2);
  CHECK(p1.slack == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(p1.d_eps == doctest::Approx(std::log(1.5)));

  const Property2Report p2 = verify_property2(cherry, host);
  CHECK(p2.pass);
  CHECK(p2.worst_deviation == 0.0);
  CHECK(p2.pairs_checked > 0);
}

TEST_CASE("weights always sum to one exactly") {
  const std::vector<Hypertree> patterns2 = {single_edge_tree(2), path_tree(2, 2),
                                            path_tree(2, 3)};
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const HostProfile host = make_host_profile(random_host(2, 7, 0.4, seed));
    for (const Hypertree& H : patterns2) {
      const WeightedHomTable t = build_mu(H, host);
      BigRat total = 0;
      for (const BigRat& w : t.weights) total += w;
      CHECK(total == BigRat(1));
      CHECK(t.support.size() == t.weights.size());
    }
  }
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const HostProfile host = make_host_profile(random_host(3, 7, 0.25, seed));
    const WeightedHomTable t = build_mu(path_tree(3, 2), host);
    BigRat total = 0;
    for (const BigRat& w : t.weights) total += w;
    CHECK(total == BigRat(1));
  }
}

TEST_CASE("edgeless hosts admit no distribution") {
  Hypergraph empty(2, 4);
  const HostProfile host = make_host_profile(empty);
  CHECK(host.M == 0);
  CHECK_THROWS_AS(build_mu(path_tree(2, 2), host), ParamError);
}

TEST_CASE("support equals the homomorphism set whenever it is small") {
  const std::vector<Hypertree> patterns = {single_edge_tree(2), path_tree(2, 2),
                                           path_tree(2, 3)};
  for (std::uint64_t seed = 11; seed <= 16; ++seed) {
    const HostProfile host = make_host_profile(random_host(2, 6, 0.5, seed));
    for (const Hypertree& H : patterns) {
      const WeightedHomTable t = build_mu(H, host);
      std::vector<HomMap> support = t.support;
      std::vector<HomMap> homs = all_homs(H.graph, host.X);
      std::sort(support.begin(), support.end());
      std::sort(homs.begin(), homs.end());
      CHECK(support == homs);
    }
  }
}

TEST_CASE("marginal audit catches a corrupted table") {
  const Hypertree cherry = path_tree(2, 2);
  const HostProfile host = make_host_profile(random_host(2, 6, 0.5, 21));
  WeightedHomTable t = build_mu(cherry, host);
  REQUIRE(verify_table_marginals(t, host).pass);
  REQUIRE(t.weights.size() >= 2);
  // move a sliver of mass between homs with different middle images; the
  // total stays 1 but some marginal must drift
  size_t other = 1;
  while (other < t.support.size() && t.support[other][1] == t.support[0][1]) ++other;
  REQUIRE(other < t.support.size());
  const BigRat sliver(1, 1000000);
  t.weights[0] += sliver;
  t.weights[other] -= sliver;
  const Property2Report bad = verify_table_marginals(t, host);
  CHECK_FALSE(bad.pass);
  CHECK(bad.worst_deviation > 0.0);
}

TEST_CASE("sidorenko bound is tight on vertex-transitive tight cases") {
  // cherry in C4: 16 homs, bound n^3 (M/n^2)^2 = 64/4 = 16
  const Hypertree cherry = path_tree(2, 2);
  const HostProfile c4 = make_host_profile(make_graph(2, 4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  const SidorenkoReport tight = sidorenko_check(cherry, c4);
  CHECK(tight.pass);
  CHECK(tight.hom_count == 16);
  CHECK(tight.lhs_scaled == tight.rhs_scaled);

  for (std::uint64_t seed = 31; seed <= 40; ++seed) {
    const HostProfile host = make_host_profile(random_host(2, 8, 0.35, seed));
    for (const Hypertree& H : {path_tree(2, 2), path_tree(2, 3)}) {
      const SidorenkoReport rep = sidorenko_check(H, host);
      CHECK(rep.pass);
      // exact comparison: hom_count * n^(k e) >= n^|H| * M^e
      CHECK(rep.lhs_scaled >= rep.rhs_scaled);
    }
  }
}

TEST_CASE("non-injective mass on the cherry in the triangle") {
  // the 6 leaf-collapsing homs carry half the mass, and the closed-form
  // bound lands on exactly the same value
  const Hypertree cherry = path_tree(2, 2);
  const HostProfile host = make_host_profile(make_graph(2, 3, {{0, 1}, {0, 2}, {1, 2}}));
  const NoninjReport rep = noninjective_mass(cherry, host);
  CHECK(rep.mass == BigRat(1, 2));
  CHECK(rep.bound == BigRat(1, 2));
  CHECK(rep.pass);
  CHECK(rep.inj_count == 6);
  CHECK(rep.consequent_applicable);
  // n^((1-r)|G| + (k-1)r) = M^2/n = 12 exactly, times (1 - bound) = 6
  CHECK(rep.inj_lower == BigRat(6));
  CHECK(rep.consequent_pass);
}

TEST_CASE("a single edge never intersects itself") {
  const Hypertree edge = single_edge_tree(2);
  for (std::uint64_t seed = 51; seed <= 56; ++seed) {
    const HostProfile host = make_host_profile(random_host(2, 7, 0.4, seed));
    const NoninjReport rep = noninjective_mass(edge, host);
    CHECK(rep.mass == BigRat(0));
    CHECK(rep.pass);
  }
}

TEST_CASE("endpoint inequalities hold across random hosts") {
  for (std::uint64_t seed = 61; seed <= 75; ++seed) {
    const HostProfile host = make_host_profile(random_host(2, 9, 0.3, seed));
    for (const Hypertree& H :
         {single_edge_tree(2), path_tree(2, 2), hypertree_from_rooted(build_tree({2, 2, 3}))}) {
      CAPTURE(seed);
      CAPTURE(H.graph.n_edges());
      const WeightedHomTable t = build_mu(H, host);
      CHECK(verify_property1(t, host).pass);
      CHECK(verify_table_marginals(t, host).pass);
      CHECK(sidorenko_check(H, host).pass);
      const NoninjReport nr = noninjective_mass(t, host);
      CHECK(nr.pass);
      if (nr.consequent_applicable) CHECK(nr.consequent_pass);
    }
  }
}

TEST_CASE("power copy extraction") {
  const TreeParams tp{2, 1, 2};

  Hypergraph edgeless(2, 5);
  const PowerCopyResult none = find_power_copy(edgeless, tp, 3);
  CHECK_FALSE(none.witness.has_value());
  CHECK(none.groups == 0);

  // p = 3, a = 1: p' = 2!/1! + 1 = 3 shared-root copies force a cube member;
  // the fixture is three whites joined to one root pair
  Hypergraph fixture(2, 5);
  for (VertexId w : {2, 3, 4}) {
    fixture.add_edge({0, w});
    fixture.add_edge({1, w});
  }
  const PowerCopyResult found = find_power_copy(fixture, tp, 3);
  REQUIRE(found.witness.has_value());
  CHECK(found.p_prime == 3);
  CHECK(found.witness->min_s == 3);
  CHECK(found.best_group == 3);
  std::vector<VertexId> roots = found.witness_roots;
  std::sort(roots.begin(), roots.end());
  CHECK(roots == std::vector<VertexId>{0, 1});
  // carrying groups: both orientations of {0,1} (3 copies each) and the six
  // ordered white pairs, whose common neighborhood {0,1} yields 2 copies
  CHECK(found.groups == 8);

  // p = 2 needs p' = 1!/0! + 1 = 2 copies: a 4-cycle suffices
  Hypergraph square(2, 4);
  square.add_edge({0, 1});
  square.add_edge({1, 2});
  square.add_edge({2, 3});
  square.add_edge({0, 3});
  const PowerCopyResult pair = find_power_copy(square, tp, 2);
  REQUIRE(pair.witness.has_value());
  CHECK(pair.p_prime == 2);
  CHECK(pair.witness->min_s == 2);

  // threshold edge count is reported for context: (2 p')^(1/b) n^(k - a/b)
  CHECK(found.threshold_edges ==
        doctest::Approx(std::sqrt(6.0) * std::pow(5.0, 1.5)));
}

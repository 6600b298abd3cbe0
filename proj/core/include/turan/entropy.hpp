#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <vector>

#include "turan/hypergraph.hpp"
#include "turan/tree.hpp"

namespace turan {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// A host together with the derived quantities every bound below is stated
// in. r_eff inverts M = n^(k - r): the density exponent is read off the host
// instead of being a free parameter, which turns each inequality into an
// exact statement about (H, X).
struct HostProfile {
  Hypergraph X;
  int n = 0;
  long long M = 0;     // ordered edges: k! * e(X)
  double r_eff = 0.0;  // k - ln M / ln n
};

// Requires n >= 2. M = 0 is allowed here; distribution builders reject it.
HostProfile make_host_profile(Hypergraph X);

// A hypergraph together with a construction order witnessing hypertree-ness:
// each non-initial edge meets the union of its predecessors in exactly the
// recorded (k-1)-set, which lies inside some earlier edge.
struct Hypertree {
  Hypergraph graph;
  std::vector<BuildStep> build_order;
};

Hypertree single_edge_tree(int k);
// Tight path: edge i covers vertices [i, i+k-1]. path_tree(2, 2) is the
// cherry.
Hypertree path_tree(int k, int n_edges);
// Partition labels are dropped: the entropy hosts are not partite and the
// distributions are over unrestricted homomorphisms.
Hypertree hypertree_from_rooted(const RootedTree& T);
// Greedy order recovery; throws ParamError if the graph is not a hypertree.
Hypertree derive_build_order(const Hypergraph& g);

// deg(T) for unordered (k-1)-sets of host vertices, plus the normalization
// constant M. deg summed over all *ordered* (k-1)-tuples gives exactly M.
struct DegIndex {
  int k = 0;
  long long M = 0;
  std::map<std::vector<VertexId>, long long> by_set;  // key sorted ascending

  // tuple entries must be distinct; order is irrelevant to the value.
  long long deg_of(const std::vector<VertexId>& tuple) const;
};

DegIndex build_deg_index(const Hypergraph& X);

// The edge-incremental distribution on Hom(H, X): the initial edge is
// uniform over the M ordered host edges, and every later edge extends by a
// uniform choice among the deg(D) host edges through the attachment image D.
// Weights are exact rationals; they sum to exactly 1.
struct WeightedHomTable {
  Hypergraph pattern;
  int n = 0;
  long long M = 0;
  std::vector<HomMap> support;  // deterministic construction order
  std::vector<BigRat> weights;
};

// Throws if M = 0 (no distribution exists) and raises an internal
// consistency error if an attachment image ever has degree 0, which a valid
// build_order makes impossible.
WeightedHomTable build_mu(const Hypertree& H, const HostProfile& host);

// ln(n^|H|) + sum mu ln mu, double precision, 0 ln 0 := 0.
double entropy_D(const WeightedHomTable& table);

struct Property1Report {
  bool pass = false;
  double d_mu = 0.0;
  double d_eps = 0.0;  // ln(n^k / M)
  long long e_H = 0;
  double slack = 0.0;  // e_H * d_eps - d_mu; pass iff slack >= -1e-9
};

Property1Report verify_property1(const Hypertree& H, const HostProfile& host);
// Variant for callers that already hold the mu table.
Property1Report verify_property1(const WeightedHomTable& table, const HostProfile& host);

struct Property2Report {
  bool pass = false;
  // Worst |marginal - deg(T)/M| over every ordered adjacent (k-1)-tuple S of
  // the pattern and every ordered distinct (k-1)-tuple T of the host. The
  // comparison itself is exact rational equality; this is 0 on a pass.
  double worst_deviation = 0.0;
  std::vector<VertexId> worst_S;
  std::vector<VertexId> worst_T;
  long long pairs_checked = 0;
};

Property2Report verify_property2(const Hypertree& H, const HostProfile& host);
// Same audit against an arbitrary table; lets tests corrupt a weight and
// watch the equality fail.
Property2Report verify_table_marginals(const WeightedHomTable& table, const HostProfile& host);

struct SidorenkoReport {
  bool pass = false;
  std::uint64_t hom_count = 0;
  double bound = 0.0;       // n^|H| (M/n^k)^e
  BigInt lhs_scaled;        // hom_count * n^(k e)
  BigInt rhs_scaled;        // n^|H| * M^e
};

// |Hom(H,X)| >= n^|H| (M/n^k)^e(H), compared in exact integers after
// clearing denominators.
SidorenkoReport sidorenko_check(const Hypertree& H, const HostProfile& host);

struct NoninjReport {
  BigRat mass;        // exact lambda-mass of the non-injective support
  BigRat bound;       // n^(r-1) (|G|^2 - (2k-1)|G| + k(k-1)) / 2, exact via n^(r-1) = n^(k-1)/M
  bool pass = false;  // mass <= bound
  std::uint64_t inj_count = 0;
  BigRat inj_lower;   // n^((1-r)|G| + (k-1)r) * (1 - bound), exact
  bool consequent_applicable = false;  // bound < 1
  bool consequent_pass = false;        // inj_count >= inj_lower
};

NoninjReport noninjective_mass(const Hypertree& H, const HostProfile& host);
// Variant for callers that already hold the mu table.
NoninjReport noninjective_mass(const WeightedHomTable& table, const HostProfile& host);

struct PowerCopyResult {
  std::optional<PowerMember> witness;
  std::vector<VertexId> witness_roots;  // host ids, in root order
  std::uint64_t p_prime = 0;
  // Ordered root tuples carrying at least one rooted copy, and the largest
  // copy count over them.
  long long groups = 0;
  long long best_group = 0;
  // (2 p')^(1/b) * n^(k - a/b): the edge count at which a group of p' copies
  // is guaranteed. Reported, not asserted.
  double threshold_edges = 0.0;
};

// Search X for a union of rooted copies of the (a,b,k)-tree forming a member
// of exactly the p-th power family: group injective rooted copies by their
// ordered root image, and if some group reaches p' = (p-1)a! / (p-2)a! + 1
// (falling factorial) copies, grow a union copy-by-copy until its minimal
// power tag hits p. The tag is the smallest number of rooted tree copies
// inside the union that reproduce it exactly, so unions glued in any
// orientation classify correctly.
PowerCopyResult find_power_copy(const Hypergraph& X, const TreeParams& tree, int p);

}  // namespace turan

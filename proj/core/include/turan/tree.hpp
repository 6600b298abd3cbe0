#pragma once

#include <string>
#include <vector>

#include "turan/hypergraph.hpp"

namespace turan {

// Parameters of the rooted k-uniform hypertree family: a whites strung on a
// path of consecutive k-edges, b edges in total, exponent ratio r = a/b.
struct TreeParams {
  int k = 2;
  int a = 1;
  int b = 2;

  // Throws ParamError naming the violated inequality.
  void validate() const;
  int root_count() const { return b - a + k - 1; }
};

// One step of a hypertree construction: `edge` is added so that it meets the
// union of all earlier edges in exactly `attach` (a (k-1)-set inside some
// earlier edge). The first step has an empty attach set.
struct BuildStep {
  Edge edge;
  std::vector<VertexId> attach;
};

struct RootedTree {
  TreeParams params;
  Hypergraph graph;               // partition labels set
  std::vector<VertexId> whites;   // ids 0..a-1, in path order
  std::vector<VertexId> roots;    // ids a..a+(b-a+k-2), in attachment order
  std::vector<BuildStep> build_order;  // b steps, replays to the edge set
};

// Build the tree: a-k+1 consecutive-white "red" edges, then one "green" edge
// per root. Root i < b-a+k-1 attaches to the k-1 whites starting at position
// floor(1 + (i-1)(a-k+2)/(b-a+k-2)); the last root attaches at a-k+2 (the
// formula would land one past the end there).
RootedTree build_tree(const TreeParams& p);

// Number of edges of T meeting S. S must consist of whites (a root id is a
// domain error); duplicates are ignored.
long long epsilon(const RootedTree& T, const std::vector<VertexId>& S);

struct BalanceResult {
  bool balanced = false;
  // Minimizer of eps(S)/|S| over nonempty white subsets; earliest subset in
  // mask order wins ties.
  std::vector<VertexId> worst_subset;
  long long worst_eps = 0;
};

// Exhaustively checks eps(S)/|S| >= b/a for every nonempty S inside the
// whites (exact cross-multiplied comparison). 2^a subsets, so a is capped.
BalanceResult check_balanced(const RootedTree& T, int exhaustive_limit = 20);

// A glued union of root-sharing copies of T. Vertices are the roots first
// (0..|R|-1, same order as T), then the merged white classes in first-use
// order. Partition labels are carried over from T.
struct PowerMember {
  Hypergraph graph;
  std::vector<VertexId> roots;
  int min_s = 0;  // smallest level this member appears at
  // Per copy, the member ids of that copy's whites (in white order).
  std::vector<std::vector<VertexId>> copy_white_images;
};

struct PowerOptions {
  bool dedupe = true;
  // Cap on s*a, the number of white slots being partitioned.
  int max_glued = 12;
  // Optional permutation of [0, s); the slot scan visits copies in this
  // order. Exists so tests can verify the deduplicated output is independent
  // of it.
  std::vector<int> copy_order;
};

// All unions of s root-sharing copies of T. A merged class holds at most one
// white per copy, and only whites with equal path position mod k may merge:
// that keeps every member k-partite with the same part labels as T, which is
// what the rooted-copy expectation formulas assume. (Orientation-mixed
// gluings exist in unlabeled hosts, but they either admit no part-respecting
// embedding at all or pick up an orientation multiplicity, so they are not
// members of the counted family.) Members are tagged with the smallest
// s' <= s at which they occur and sorted by (min_s, canonical form).
// dedupe=false returns one entry per raw partition instead, in scan order.
std::vector<PowerMember> enumerate_power(const RootedTree& T, int s,
                                         const PowerOptions& opts = {});

// Exact check of e(H)*a >= (|H| - |R|)*b.
bool check_edge_bound(const PowerMember& H, const TreeParams& p);

}  // namespace turan

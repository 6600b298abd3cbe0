#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace turan {

using VertexId = int;
// A sorted k-set of distinct vertex ids.
using Edge = std::vector<VertexId>;
// Image array indexed by pattern vertex id; kUnassigned marks a free slot in
// partial maps.
using HomMap = std::vector<VertexId>;

inline constexpr VertexId kUnassigned = -1;

// k-uniform hypergraph on dense vertex ids 0..n-1. Edges are kept
// deduplicated in lexicographic order, so edge indices are stable once the
// graph stops growing. An optional partition labels each vertex with a part
// in [0, k); when present, every edge must meet every part exactly once
// (checked lazily, since labels may be assigned after the edges).
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(int k, int n_vertices);

  int k() const { return k_; }
  int n_vertices() const { return n_; }
  int n_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_[static_cast<size_t>(i)]; }

  // Sorts e, validates it (k distinct ids in range), and inserts it in
  // lexicographic position. Re-adding an existing edge is a no-op.
  void add_edge(Edge e);
  // Removes an edge previously added; e must be sorted ascending. Removing a
  // missing edge is a no-op.
  void remove_edge(const Edge& e);
  // e must be sorted ascending.
  bool has_edge(const Edge& e) const;
  // Index of a sorted edge in edges(), or -1.
  int edge_index(const Edge& e) const;

  // Indices of edges containing v.
  const std::vector<int>& incident_edges(VertexId v) const;
  int degree(VertexId v) const {
    return static_cast<int>(incident_edges(v).size());
  }

  bool has_partition() const { return !partition_.empty(); }
  // parts.size() == n_vertices, every value in [0, k). Verifies the
  // one-vertex-per-part property on every current edge.
  void set_partition(std::vector<int> parts);
  void clear_partition() { partition_.clear(); }
  int part_of(VertexId v) const { return partition_[static_cast<size_t>(v)]; }
  const std::vector<int>& partition() const { return partition_; }

 private:
  int k_ = 0;
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> partition_;
  // Lazy incidence cache, rebuilt after mutations.
  mutable std::vector<std::vector<int>> incidence_;
  mutable bool incidence_fresh_ = false;
};

struct HomOptions {
  bool injective = false;
  // When both the pattern vertex carries a part label and the host is
  // partitioned, restrict images to the matching part. Freeness checks turn
  // this off: subgraph containment is label-free.
  bool respect_partition = true;
};

// Return false to stop the enumeration early.
using HomVisitor = std::function<bool(const HomMap&)>;

// Backtracking enumeration of homomorphisms H -> X extending the partial map
// `pinned` (pass an empty map, or a size-|H| array with kUnassigned holes).
// Every hom extending the constraint is visited exactly once. Pattern
// vertices are placed in a connectivity-aware order so hypertree patterns
// enumerate with linear delay.
void enumerate_homs(const Hypergraph& H, const Hypergraph& X,
                    const HomMap& pinned, const HomOptions& opts,
                    const HomVisitor& visit);

// enumerate_homs restricted to injective maps.
void enumerate_inj(const Hypergraph& H, const Hypergraph& X,
                   const HomMap& pinned, const HomOptions& opts,
                   const HomVisitor& visit);

std::uint64_t count_homs(const Hypergraph& H, const Hypergraph& X,
                         const HomMap& pinned = {}, HomOptions opts = {});
std::uint64_t count_inj(const Hypergraph& H, const Hypergraph& X,
                        const HomMap& pinned = {}, HomOptions opts = {});
std::vector<HomMap> all_homs(const Hypergraph& H, const Hypergraph& X,
                             const HomMap& pinned = {}, HomOptions opts = {});

struct ContainsWitness {
  HomMap map;        // injective hom of family[member] into X
  int member = -1;   // index into the family
};

// Does X contain some family member as a subgraph? Containment is label-free
// (partition labels on either side are ignored) and injective.
std::optional<ContainsWitness> contains_any(
    const Hypergraph& X, const std::vector<Hypergraph>& family);

// Canonical byte string: equal for two hypergraphs iff they are isomorphic.
// Brute-force minimum of the edge-list encoding over vertex relabelings,
// restricted to classes of an iterated degree refinement (which every
// isomorphism preserves). max_vertices guards the factorial blowup.
std::string canonical_form(const Hypergraph& G, int max_vertices = 10);

// Same, but only relabelings fixing vertices 0..n_pinned-1 pointwise are
// considered: equality iff isomorphic by a pinned-prefix isomorphism. Used to
// compare rooted structures whose roots occupy the lowest ids.
std::string canonical_form_pinned(const Hypergraph& G, int n_pinned,
                                  int max_vertices = 10);

}  // namespace turan

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "turan/hypergraph.hpp"
#include "turan/poly.hpp"
#include "turan/tree.hpp"

namespace turan {

// Construction-side parameters. Deliberately weaker than TreeParams: the
// instance builder only needs k >= 2, a >= 0, b >= 1, and the interesting
// diagnostic patterns are not always trees with the same (a, b).
struct AlgParams {
  int k = 2;
  int a = 1;
  int b = 1;

  void validate() const;
  static AlgParams from_tree(const TreeParams& t);
};

struct ConstructionParams {
  AlgParams alg;
  std::uint32_t q = 2;       // prime
  std::uint64_t seed = 0;    // master seed; poly i uses stream i
  long long s = 0;           // b(b - a + k - 1) + a + 1
  long long d = 0;           // b s - 1

  int num_vars() const { return alg.k * alg.b; }
  std::uint64_t part_size() const;        // q^b
  std::uint64_t tuple_count() const;      // q^(b k)

  static ConstructionParams make(const AlgParams& alg, std::uint32_t q, std::uint64_t seed);
};

// k-partite host on k q^b vertices: part j holds the vectors of F_q^b,
// vertex id = j q^b + rank(vector) with big-endian ranking, and a
// transversal (v_0, ..., v_(k-1)) is an edge exactly when all a sampled
// polynomials vanish on the concatenated coordinates.
struct AlgebraicInstance {
  ConstructionParams params;
  std::vector<MultiPoly> polys;
  Hypergraph graph;

  VertexId vertex_id(int part, std::uint64_t rank) const;
  int part_of(VertexId v) const;
  std::vector<std::uint32_t> coords_of(VertexId v) const;
};

// Rejects q^(b k) > tuple_limit with a LimitError naming both numbers.
AlgebraicInstance build_instance(const ConstructionParams& params,
                                 std::uint64_t tuple_limit = 10'000'000);
// Same construction from caller-supplied polynomials (count must be a, each
// over k b variables mod q). Used for hand-built fixtures.
AlgebraicInstance build_instance_with_polys(const ConstructionParams& params,
                                            std::vector<MultiPoly> polys,
                                            std::uint64_t tuple_limit = 10'000'000);

// Edge count of the instance without materializing the graph.
std::uint64_t instance_edge_count(const ConstructionParams& params,
                                  std::uint64_t tuple_limit = 10'000'000);

// Injective part-respecting homomorphism count with the pattern roots pinned
// to the host tuple w. Pattern must carry a partition; throws ParamError if
// some w_i sits in a different part than its root demands.
long long count_rooted_copies(const AlgebraicInstance& inst, const Hypergraph& pattern,
                              const std::vector<VertexId>& roots,
                              const std::vector<VertexId>& w);

struct NonemptyReport {
  int num_seeds = 0;
  int nonempty = 0;
  double rate = 0.0;
  double wilson_lo = 0.0;  // 95% two-sided Wilson interval
  double wilson_hi = 0.0;
  double target = 0.0;     // 1 / q^a
  bool pass = false;       // rate >= target - (Wilson half-width)
};

NonemptyReport nonempty_rate(const AlgParams& alg, std::uint32_t q, int num_seeds,
                             std::uint64_t master_seed);

struct ExpectationReport {
  int num_seeds = 0;
  int tuples_per_seed = 1;
  double mean = 0.0;         // of the per-seed tuple averages
  double std_error = 0.0;
  double prediction = 0.0;   // q^exponent
  long long exponent = 0;    // b (|H| - |R|) - a e(H)
  bool pass = false;         // |mean - prediction| <= max(3 SE, prediction / 4)
};

// A pattern to count rooted copies of, with its pinned-root slots. The graph
// must carry part labels.
struct RootedPattern {
  std::string name;
  Hypergraph graph;
  std::vector<VertexId> roots;
};

// Monte Carlo estimate of the rooted copy count at a uniformly sampled root
// tuple (entries distinct within each part), fresh polynomials per seed.
// With tuples_per_seed > 1 each instance is probed at that many independent
// root tuples and contributes their average; the standard error is still
// taken across seeds, so correlated counts within one instance never shrink
// it. Useful where the count is a rare burst and instances dwarf the probes.
ExpectationReport rooted_copy_expectation(const AlgParams& alg, const Hypergraph& pattern,
                                          const std::vector<VertexId>& roots, std::uint32_t q,
                                          int num_seeds, std::uint64_t master_seed,
                                          int tuples_per_seed = 1);

// Same estimate for several patterns against one shared instance stream:
// each seed builds a single instance and every pattern gets its own root
// sample in it. Reports line up with the input order. Equivalent to calling
// rooted_copy_expectation per pattern except that instance construction work
// is shared; the single-pattern call is the batch of one.
std::vector<ExpectationReport> rooted_copy_expectation_batch(
    const AlgParams& alg, const std::vector<RootedPattern>& patterns, std::uint32_t q,
    int num_seeds, std::uint64_t master_seed, int tuples_per_seed = 1);

struct DichotomyReport {
  std::uint32_t q = 0;
  int p_config = 0;
  long long samples = 0;
  std::map<long long, long long> histogram;  // copy count -> occurrences
  long long in_gap = 0;                      // p_config <= count < q/2
  double gap_fraction = 0.0;
};

// Report-only dichotomy diagnostic: histogram of rooted copy counts across
// seeds and random root tuples, with the fraction landing in [p, q/2).
DichotomyReport copy_dichotomy(const AlgParams& alg, const Hypergraph& pattern,
                               const std::vector<VertexId>& roots, std::uint32_t q,
                               int num_seeds, int tuples_per_seed, int p_config,
                               std::uint64_t master_seed);

struct EdgeStatsRow {
  std::uint32_t q = 0;
  int num_seeds = 0;
  int nonempty = 0;
  double mean_edges = 0.0;
  double mean_nonempty_edges = 0.0;
  double predicted = 0.0;  // q^(b k - a)
  double ratio = 0.0;      // mean_nonempty_edges / predicted
};

EdgeStatsRow edge_stats(const AlgParams& alg, std::uint32_t q, int num_seeds,
                        std::uint64_t master_seed);

// Label-free containment probe against a family of forbidden patterns.
std::optional<ContainsWitness> find_family_copy(const AlgebraicInstance& inst,
                                                const std::vector<Hypergraph>& family);

}  // namespace turan

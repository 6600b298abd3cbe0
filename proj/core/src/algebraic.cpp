#include "turan/algebraic.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <utility>

#include "turan/errors.hpp"
#include "turan/fq.hpp"
#include "turan/parallel.hpp"
#include "turan/rng.hpp"

namespace turan {

namespace {

// base^exp, saturating at UINT64_MAX.
std::uint64_t ipow_sat(std::uint64_t base, long long exp) {
  unsigned __int128 acc = 1;
  for (long long i = 0; i < exp; ++i) {
    acc *= base;
    if (acc > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(acc);
}

void require_prime_q(std::uint32_t q) {
  if (!is_prime(q)) {
    throw ParamError("construction modulus must be prime (q=" + std::to_string(q) + ")");
  }
}

// Common validation + the all-polys-vanish mask over the q^(b k) transversal
// tuples. Shared by the graph builder and the count-only path.
std::vector<char> vanishing_mask(const ConstructionParams& params,
                                 const std::vector<MultiPoly>& polys,
                                 std::uint64_t tuple_limit) {
  params.alg.validate();
  require_prime_q(params.q);
  const std::uint64_t tc = params.tuple_count();
  if (tc > tuple_limit) {
    throw LimitError("transversal tuple count q^(b k) exceeds the instance limit", tuple_limit,
                     tc);
  }
  if (static_cast<int>(polys.size()) != params.alg.a) {
    throw ParamError("expected " + std::to_string(params.alg.a) + " polynomials, got " +
                     std::to_string(polys.size()));
  }
  std::vector<char> mask(tc, 1);
  for (const MultiPoly& f : polys) {
    if (f.q != params.q || f.num_vars != params.num_vars()) {
      throw ParamError("polynomial shape mismatch: expected " +
                       std::to_string(params.num_vars()) + " vars mod " +
                       std::to_string(params.q));
    }
    const std::vector<std::uint32_t> vals = grid_values(f, tuple_limit);
    for (std::uint64_t i = 0; i < tc; ++i) {
      if (vals[i] != 0) mask[i] = 0;
    }
  }
  return mask;
}

std::vector<MultiPoly> sample_instance_polys(const ConstructionParams& params) {
  if (params.d < 0 || params.d > 1'000'000) {
    throw ParamError("derived degree d out of range (d=" + std::to_string(params.d) + ")");
  }
  std::vector<MultiPoly> polys;
  polys.reserve(static_cast<size_t>(params.alg.a));
  for (int i = 0; i < params.alg.a; ++i) {
    const std::uint64_t poly_seed =
        trial_rng(params.seed, static_cast<std::uint64_t>(i), 0).next_u64();
    polys.push_back(sample_poly(params.q, params.num_vars(), static_cast<int>(params.d),
                                poly_seed));
  }
  return polys;
}

AlgebraicInstance assemble(const ConstructionParams& params, std::vector<MultiPoly> polys,
                           std::uint64_t tuple_limit) {
  const std::vector<char> mask = vanishing_mask(params, polys, tuple_limit);
  const std::uint64_t ps = params.part_size();
  const int k = params.alg.k;
  const int n = static_cast<int>(ps) * k;

  AlgebraicInstance inst;
  inst.params = params;
  inst.polys = std::move(polys);
  inst.graph = Hypergraph(k, n);

  // Tuple indices are big-endian over the k part ranks, so scanning in index
  // order yields edges in lexicographic order and every insertion lands at
  // the back.
  Edge e(static_cast<size_t>(k));
  for (std::uint64_t idx = 0; idx < mask.size(); ++idx) {
    if (!mask[idx]) continue;
    std::uint64_t rest = idx;
    for (int j = k - 1; j >= 0; --j) {
      e[static_cast<size_t>(j)] =
          static_cast<VertexId>(static_cast<std::uint64_t>(j) * ps + rest % ps);
      rest /= ps;
    }
    inst.graph.add_edge(e);
  }

  std::vector<int> parts(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) parts[static_cast<size_t>(v)] = v / static_cast<int>(ps);
  inst.graph.set_partition(std::move(parts));
  return inst;
}

struct WilsonInterval {
  double lo = 0.0;
  double hi = 0.0;
};

WilsonInterval wilson95(int successes, int trials) {
  const double z = 1.959963984540054;
  const double n = trials;
  const double p = successes / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  // The interval contains p in exact arithmetic; rounding can push an endpoint
  // past it when p hits 0 or 1, so widen to keep the containment.
  return {std::max(0.0, std::min(center - half, p)),
          std::min(1.0, std::max(center + half, p))};
}

// Uniform root tuple in the host, matching the pattern roots' parts, with
// distinct ranks inside each part.
std::vector<VertexId> sample_root_tuple(const AlgebraicInstance& inst,
                                        const Hypergraph& pattern,
                                        const std::vector<VertexId>& roots, Rng& rng) {
  const std::uint64_t ps = inst.params.part_size();
  std::vector<std::set<std::uint64_t>> used(static_cast<size_t>(inst.params.alg.k));
  std::vector<VertexId> w;
  w.reserve(roots.size());
  for (VertexId r : roots) {
    const int part = pattern.part_of(r);
    auto& taken = used[static_cast<size_t>(part)];
    if (taken.size() >= ps) {
      throw ParamError("more roots in one part than the part has vertices");
    }
    std::uint64_t rank;
    do {
      rank = rng.uniform_below(ps);
    } while (taken.count(rank) != 0);
    taken.insert(rank);
    w.push_back(inst.vertex_id(part, rank));
  }
  return w;
}

void check_rooted_pattern(const Hypergraph& pattern, const std::vector<VertexId>& roots,
                          int k) {
  if (pattern.k() != k) {
    throw ParamError("pattern arity does not match the construction (k=" + std::to_string(k) +
                     ")");
  }
  if (!pattern.has_partition()) {
    throw ParamError("rooted counting needs part labels on the pattern");
  }
  std::vector<VertexId> sorted = roots;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ParamError("root list has repeated vertices");
  }
  for (VertexId r : roots) {
    if (r < 0 || r >= pattern.n_vertices()) {
      throw ParamError("root id out of range: " + std::to_string(r));
    }
  }
}

}  // namespace

void AlgParams::validate() const {
  if (k < 2) throw ParamError("construction params violate k >= 2 (k=" + std::to_string(k) + ")");
  if (a < 0) throw ParamError("construction params violate a >= 0 (a=" + std::to_string(a) + ")");
  if (b < 1) throw ParamError("construction params violate b >= 1 (b=" + std::to_string(b) + ")");
}

AlgParams AlgParams::from_tree(const TreeParams& t) {
  t.validate();
  return AlgParams{t.k, t.a, t.b};
}

std::uint64_t ConstructionParams::part_size() const {
  return ipow_sat(q, alg.b);
}

std::uint64_t ConstructionParams::tuple_count() const {
  return ipow_sat(q, static_cast<long long>(alg.b) * alg.k);
}

ConstructionParams ConstructionParams::make(const AlgParams& alg, std::uint32_t q,
                                            std::uint64_t seed) {
  alg.validate();
  require_prime_q(q);
  ConstructionParams cp;
  cp.alg = alg;
  cp.q = q;
  cp.seed = seed;
  const DerivedConstants dc = derive_constants(alg.k, alg.a, alg.b);
  cp.s = dc.s;
  cp.d = dc.d;
  return cp;
}

VertexId AlgebraicInstance::vertex_id(int part, std::uint64_t rank) const {
  const std::uint64_t ps = params.part_size();
  if (part < 0 || part >= params.alg.k || rank >= ps) {
    throw ParamError("vertex coordinates out of range");
  }
  return static_cast<VertexId>(static_cast<std::uint64_t>(part) * ps + rank);
}

int AlgebraicInstance::part_of(VertexId v) const {
  if (v < 0 || v >= graph.n_vertices()) {
    throw ParamError("vertex id out of range: " + std::to_string(v));
  }
  return static_cast<int>(static_cast<std::uint64_t>(v) / params.part_size());
}

std::vector<std::uint32_t> AlgebraicInstance::coords_of(VertexId v) const {
  const int part = part_of(v);
  const std::uint64_t rank =
      static_cast<std::uint64_t>(v) - static_cast<std::uint64_t>(part) * params.part_size();
  return unrank_vector(rank, params.alg.b, params.q);
}

AlgebraicInstance build_instance(const ConstructionParams& params, std::uint64_t tuple_limit) {
  return assemble(params, sample_instance_polys(params), tuple_limit);
}

AlgebraicInstance build_instance_with_polys(const ConstructionParams& params,
                                            std::vector<MultiPoly> polys,
                                            std::uint64_t tuple_limit) {
  return assemble(params, std::move(polys), tuple_limit);
}

std::uint64_t instance_edge_count(const ConstructionParams& params, std::uint64_t tuple_limit) {
  const std::vector<char> mask = vanishing_mask(params, sample_instance_polys(params), tuple_limit);
  std::uint64_t count = 0;
  for (char m : mask) count += static_cast<std::uint64_t>(m);
  return count;
}

long long count_rooted_copies(const AlgebraicInstance& inst, const Hypergraph& pattern,
                              const std::vector<VertexId>& roots,
                              const std::vector<VertexId>& w) {
  check_rooted_pattern(pattern, roots, inst.params.alg.k);
  if (w.size() != roots.size()) {
    throw ParamError("root tuple length mismatch");
  }
  HomMap pinned(static_cast<size_t>(pattern.n_vertices()), kUnassigned);
  for (size_t i = 0; i < roots.size(); ++i) {
    if (inst.part_of(w[i]) != pattern.part_of(roots[i])) {
      throw ParamError("root image sits in the wrong part (root " + std::to_string(roots[i]) +
                       ")");
    }
    pinned[static_cast<size_t>(roots[i])] = w[i];
  }
  return static_cast<long long>(count_inj(pattern, inst.graph, pinned));
}

NonemptyReport nonempty_rate(const AlgParams& alg, std::uint32_t q, int num_seeds,
                             std::uint64_t master_seed) {
  if (num_seeds < 1) throw ParamError("nonempty_rate needs at least one seed");
  NonemptyReport rep;
  rep.num_seeds = num_seeds;
  for (int t = 0; t < num_seeds; ++t) {
    const std::uint64_t seed = trial_rng(master_seed, 0, static_cast<std::uint64_t>(t)).next_u64();
    const ConstructionParams cp = ConstructionParams::make(alg, q, seed);
    if (instance_edge_count(cp) > 0) ++rep.nonempty;
  }
  rep.rate = static_cast<double>(rep.nonempty) / num_seeds;
  const WilsonInterval ci = wilson95(rep.nonempty, num_seeds);
  rep.wilson_lo = ci.lo;
  rep.wilson_hi = ci.hi;
  rep.target = std::pow(static_cast<double>(q), -static_cast<double>(alg.a));
  // Pass rule: the observed rate may fall short of 1/q^a by at most the 95%
  // Wilson half-width.
  rep.pass = rep.rate >= rep.target - (rep.wilson_hi - rep.wilson_lo) / 2.0;
  return rep;
}

std::vector<ExpectationReport> rooted_copy_expectation_batch(
    const AlgParams& alg, const std::vector<RootedPattern>& patterns, std::uint32_t q,
    int num_seeds, std::uint64_t master_seed, int tuples_per_seed) {
  alg.validate();
  if (patterns.empty()) throw ParamError("expectation batch needs at least one pattern");
  for (const RootedPattern& p : patterns) check_rooted_pattern(p.graph, p.roots, alg.k);
  if (num_seeds < 2) throw ParamError("expectation estimate needs at least two seeds");
  if (tuples_per_seed < 1) throw ParamError("expectation estimate needs at least one tuple per seed");

  const size_t np = patterns.size();
  std::vector<ExpectationReport> reps(np);
  for (size_t j = 0; j < np; ++j) {
    reps[j].num_seeds = num_seeds;
    reps[j].tuples_per_seed = tuples_per_seed;
    reps[j].exponent =
        static_cast<long long>(alg.b) *
            (patterns[j].graph.n_vertices() - static_cast<long long>(patterns[j].roots.size())) -
        static_cast<long long>(alg.a) * patterns[j].graph.n_edges();
    reps[j].prediction = std::pow(static_cast<double>(q), static_cast<double>(reps[j].exponent));
  }

  // counts[j * num_seeds + t] so each pattern's column stays contiguous.
  // Each slot holds the seed's tuple average, not a raw count.
  std::vector<double> counts(np * static_cast<size_t>(num_seeds));
  const auto one_trial = [&](size_t t) {
    const std::uint64_t seed = trial_rng(master_seed, 0, static_cast<std::uint64_t>(t)).next_u64();
    const AlgebraicInstance inst = build_instance(ConstructionParams::make(alg, q, seed));
    for (size_t j = 0; j < np; ++j) {
      Rng rng = trial_rng(master_seed, 1 + static_cast<std::uint64_t>(j),
                          static_cast<std::uint64_t>(t));
      long long total = 0;
      for (int u = 0; u < tuples_per_seed; ++u) {
        const std::vector<VertexId> w = sample_root_tuple(inst, patterns[j].graph,
                                                          patterns[j].roots, rng);
        total += count_rooted_copies(inst, patterns[j].graph, patterns[j].roots, w);
      }
      counts[j * static_cast<size_t>(num_seeds) + t] =
          static_cast<double>(total) / tuples_per_seed;
    }
  };
  // Trial 0 runs alone so parameter problems surface as exceptions before
  // the parallel section; the remaining seeds are independent.
  one_trial(0);
  parallel_for(static_cast<size_t>(num_seeds) - 1, [&](size_t i) { one_trial(i + 1); });

  for (size_t j = 0; j < np; ++j) {
    const double* col = counts.data() + j * static_cast<size_t>(num_seeds);
    double sum = 0.0;
    for (int t = 0; t < num_seeds; ++t) sum += col[t];
    reps[j].mean = sum / num_seeds;
    double ss = 0.0;
    for (int t = 0; t < num_seeds; ++t) {
      const double d = col[t] - reps[j].mean;
      ss += d * d;
    }
    reps[j].std_error = std::sqrt(ss / (static_cast<double>(num_seeds) - 1.0) / num_seeds);
    const double tol = std::max(3.0 * reps[j].std_error, reps[j].prediction / 4.0);
    reps[j].pass = std::abs(reps[j].mean - reps[j].prediction) <= tol;
  }
  return reps;
}

ExpectationReport rooted_copy_expectation(const AlgParams& alg, const Hypergraph& pattern,
                                          const std::vector<VertexId>& roots, std::uint32_t q,
                                          int num_seeds, std::uint64_t master_seed,
                                          int tuples_per_seed) {
  return rooted_copy_expectation_batch(alg, {RootedPattern{"", pattern, roots}}, q, num_seeds,
                                       master_seed, tuples_per_seed)
      .front();
}

DichotomyReport copy_dichotomy(const AlgParams& alg, const Hypergraph& pattern,
                               const std::vector<VertexId>& roots, std::uint32_t q,
                               int num_seeds, int tuples_per_seed, int p_config,
                               std::uint64_t master_seed) {
  alg.validate();
  check_rooted_pattern(pattern, roots, alg.k);
  if (num_seeds < 1 || tuples_per_seed < 1) {
    throw ParamError("dichotomy scan needs at least one seed and one tuple");
  }
  DichotomyReport rep;
  rep.q = q;
  rep.p_config = p_config;
  for (int t = 0; t < num_seeds; ++t) {
    const std::uint64_t seed = trial_rng(master_seed, 0, static_cast<std::uint64_t>(t)).next_u64();
    const AlgebraicInstance inst = build_instance(ConstructionParams::make(alg, q, seed));
    for (int j = 0; j < tuples_per_seed; ++j) {
      Rng rng = trial_rng(master_seed, 2 + static_cast<std::uint64_t>(j),
                          static_cast<std::uint64_t>(t));
      const std::vector<VertexId> w = sample_root_tuple(inst, pattern, roots, rng);
      const long long c = count_rooted_copies(inst, pattern, roots, w);
      ++rep.histogram[c];
      ++rep.samples;
      if (c >= p_config && 2 * c < static_cast<long long>(q)) ++rep.in_gap;
    }
  }
  rep.gap_fraction = static_cast<double>(rep.in_gap) / static_cast<double>(rep.samples);
  return rep;
}

EdgeStatsRow edge_stats(const AlgParams& alg, std::uint32_t q, int num_seeds,
                        std::uint64_t master_seed) {
  if (num_seeds < 1) throw ParamError("edge stats need at least one seed");
  EdgeStatsRow row;
  row.q = q;
  row.num_seeds = num_seeds;
  std::uint64_t total = 0;
  std::uint64_t total_nonempty = 0;
  for (int t = 0; t < num_seeds; ++t) {
    const std::uint64_t seed = trial_rng(master_seed, 0, static_cast<std::uint64_t>(t)).next_u64();
    const std::uint64_t c = instance_edge_count(ConstructionParams::make(alg, q, seed));
    total += c;
    if (c > 0) {
      ++row.nonempty;
      total_nonempty += c;
    }
  }
  row.mean_edges = static_cast<double>(total) / num_seeds;
  row.mean_nonempty_edges =
      row.nonempty > 0 ? static_cast<double>(total_nonempty) / row.nonempty : 0.0;
  row.predicted = std::pow(static_cast<double>(q),
                           static_cast<double>(static_cast<long long>(alg.b) * alg.k - alg.a));
  row.ratio = row.predicted > 0.0 ? row.mean_nonempty_edges / row.predicted : 0.0;
  return row;
}

std::optional<ContainsWitness> find_family_copy(const AlgebraicInstance& inst,
                                                const std::vector<Hypergraph>& family) {
  return contains_any(inst.graph, family);
}

}  // namespace turan

#pragma once

#include <cstdint>
#include <vector>

#include "turan/hypergraph.hpp"
#include "turan/lifting.hpp"

namespace turan {

struct ExOptions {
  // Attempted edge inclusions before the search gives up with a BudgetError
  // carrying the bracket proved so far.
  std::uint64_t node_budget = 100'000'000;
  // With C(n, k) at or below this, the search runs without the incumbent
  // cut and visits every free subgraph; above it, branch-and-bound.
  std::uint64_t exhaustive_limit = 24;
};

struct ExResult {
  long long value = 0;
  Hypergraph witness;  // one extremal graph
  std::uint64_t nodes = 0;
  bool exhaustive = false;
};

// Exact maximum edge count of a family-free k-uniform hypergraph on n
// labeled vertices. Containment is label-free and checked incrementally
// against the newest edge only. Top-level inclusion branches run in
// parallel around a shared incumbent; value and witness are deterministic.
ExResult exact_ex(int n, int k, const std::vector<Hypergraph>& family,
                  const ExOptions& opts = {});

// Same search over graphs free of the whole lifted family, using the
// intersection predicate instead of materialized members.
ExResult exact_ex_lifted(int n, const LiftedFamilySpec& spec, const ExOptions& opts = {});

struct LiftIdentityRow {
  int n_base = 0;
  long long ex_base = 0;    // ex(n, base family) at arity l
  long long ex_lifted = 0;  // ex(n + k - l, lifted family) at arity k
  bool equal = false;
};

// One row per n in [n_min, n_max], both sides computed by the oracle.
std::vector<LiftIdentityRow> lifting_identity_table(const LiftedFamilySpec& spec, int n_min,
                                                    int n_max, const ExOptions& opts = {});

}  // namespace turan

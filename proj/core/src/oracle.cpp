#include "turan/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <string>

#include "turan/errors.hpp"
#include "turan/parallel.hpp"

namespace turan {

namespace {

std::vector<Edge> all_k_subsets(int n, int k) {
  std::vector<Edge> out;
  if (n < k) return out;
  Edge pick(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<size_t>(i)] = i;
  while (true) {
    out.push_back(pick);
    int pos = k - 1;
    while (pos >= 0 && pick[static_cast<size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) break;
    ++pick[static_cast<size_t>(pos)];
    for (int j = pos + 1; j < k; ++j) {
      pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
    }
  }
  return out;
}

// Does G contain an injective copy of F in which some edge of F lands
// exactly on img? Used to keep the freeness check incremental: a newly added
// edge can only create copies that pass through it.
bool contains_member_using(const Hypergraph& G, const Hypergraph& F, const Edge& img) {
  for (const Edge& f : F.edges()) {
    Edge perm = img;
    std::sort(perm.begin(), perm.end());
    do {
      HomMap pinned(static_cast<size_t>(F.n_vertices()), kUnassigned);
      for (size_t j = 0; j < f.size(); ++j) {
        pinned[static_cast<size_t>(f[j])] = perm[j];
      }
      bool found = false;
      enumerate_inj(F, G, pinned, HomOptions{true, false}, [&](const HomMap&) {
        found = true;
        return false;
      });
      if (found) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return false;
}

// True if cur (which already includes newest) stays admissible.
using AdmitFn = std::function<bool(const Hypergraph&, const Edge&)>;

ExResult run_search(int n, int k, const AdmitFn& admits, const ExOptions& opts) {
  if (k < 2) throw ParamError("oracle arity must be at least 2");
  if (n < 0) throw ParamError("oracle vertex count must be nonnegative");
  const std::vector<Edge> candidates = all_k_subsets(n, k);
  const int total = static_cast<int>(candidates.size());
  const bool exhaustive =
      static_cast<std::uint64_t>(total) <= opts.exhaustive_limit;

  std::atomic<long long> incumbent{0};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> out_of_budget{false};

  struct TaskBest {
    long long value = -1;
    std::vector<Edge> edges;
  };
  // Slot per first-included-edge branch, plus one for the empty graph.
  std::vector<TaskBest> task_best(static_cast<size_t>(total) + 1);
  task_best[static_cast<size_t>(total)] = TaskBest{0, {}};

  const std::function<void(Hypergraph&, int, TaskBest&)> dfs = [&](Hypergraph& cur,
                                                                   int next_idx,
                                                                   TaskBest& best) {
    const long long cur_e = cur.n_edges();
    if (cur_e > best.value) {
      best.value = cur_e;
      best.edges = cur.edges();
    }
    long long inc = incumbent.load(std::memory_order_relaxed);
    while (cur_e > inc &&
           !incumbent.compare_exchange_weak(inc, cur_e, std::memory_order_relaxed)) {
    }
    for (int i = next_idx; i < total; ++i) {
      if (!exhaustive &&
          cur_e + (total - i) <= incumbent.load(std::memory_order_relaxed)) {
        break;
      }
      if (out_of_budget.load(std::memory_order_relaxed)) return;
      if (nodes.fetch_add(1, std::memory_order_relaxed) + 1 > opts.node_budget) {
        out_of_budget.store(true, std::memory_order_relaxed);
        return;
      }
      cur.add_edge(candidates[static_cast<size_t>(i)]);
      if (admits(cur, candidates[static_cast<size_t>(i)])) {
        dfs(cur, i + 1, best);
      }
      cur.remove_edge(candidates[static_cast<size_t>(i)]);
    }
  };

  // Top-level inclusion branches share only the incumbent, so they can run
  // in parallel; the final value is an order-independent max.
  parallel_for(static_cast<size_t>(total), [&](size_t i) {
    const int idx = static_cast<int>(i);
    if (!exhaustive &&
        1 + (total - idx - 1) <= incumbent.load(std::memory_order_relaxed)) {
      return;
    }
    if (out_of_budget.load(std::memory_order_relaxed)) return;
    if (nodes.fetch_add(1, std::memory_order_relaxed) + 1 > opts.node_budget) {
      out_of_budget.store(true, std::memory_order_relaxed);
      return;
    }
    Hypergraph cur(k, n);
    cur.add_edge(candidates[i]);
    if (admits(cur, candidates[i])) {
      dfs(cur, idx + 1, task_best[i]);
    }
  });

  if (out_of_budget.load()) {
    throw BudgetError("oracle search exceeded its node budget",
                      incumbent.load(), static_cast<long long>(total));
  }

  ExResult res;
  res.nodes = nodes.load();
  res.exhaustive = exhaustive;
  res.value = 0;
  size_t best_slot = static_cast<size_t>(total);
  for (size_t i = 0; i < task_best.size(); ++i) {
    if (task_best[i].value > res.value) {
      res.value = task_best[i].value;
      best_slot = i;
    }
  }
  res.witness = Hypergraph(k, n);
  for (const Edge& e : task_best[best_slot].edges) res.witness.add_edge(e);
  return res;
}

}  // namespace

ExResult exact_ex(int n, int k, const std::vector<Hypergraph>& family, const ExOptions& opts) {
  for (size_t i = 0; i < family.size(); ++i) {
    if (family[i].k() != k) {
      throw ParamError("family member " + std::to_string(i) + " is not " + std::to_string(k) +
                       "-uniform");
    }
    if (family[i].n_edges() == 0) {
      // An edgeless member embeds in everything, including the empty graph.
      throw ParamError("family member " + std::to_string(i) + " has no edges");
    }
  }
  const AdmitFn admits = [&family](const Hypergraph& cur, const Edge& newest) {
    for (const Hypergraph& F : family) {
      if (contains_member_using(cur, F, newest)) return false;
    }
    return true;
  };
  return run_search(n, k, admits, opts);
}

ExResult exact_ex_lifted(int n, const LiftedFamilySpec& spec, const ExOptions& opts) {
  spec.validate();
  const int core = spec.k - spec.l;
  // Any lifted copy whose member has two disjoint edges forces the apex set
  // to equal the running common intersection, so scanning that
  // intersection's core-subsets against the newest edge is a complete
  // incremental check.
  const AdmitFn admits = [&spec, core, n](const Hypergraph& cur, const Edge& newest) {
    if (cur.n_edges() < 2) return true;
    std::vector<VertexId> common = cur.edge(0);
    for (int i = 1; i < cur.n_edges(); ++i) {
      std::vector<VertexId> next;
      std::set_intersection(common.begin(), common.end(), cur.edge(i).begin(),
                            cur.edge(i).end(), std::back_inserter(next));
      common = std::move(next);
    }
    if (static_cast<int>(common.size()) < core) return false;

    std::vector<int> pick(static_cast<size_t>(core));
    for (int i = 0; i < core; ++i) pick[static_cast<size_t>(i)] = i;
    while (true) {
      std::vector<VertexId> apex;
      for (int i : pick) apex.push_back(common[static_cast<size_t>(i)]);
      Hypergraph residue(spec.l, n);
      Edge newest_res;
      for (const Edge& e : cur.edges()) {
        Edge r;
        for (VertexId v : e) {
          if (!std::binary_search(apex.begin(), apex.end(), v)) r.push_back(v);
        }
        if (e == newest) newest_res = r;
        residue.add_edge(std::move(r));
      }
      for (const Hypergraph& F : spec.base) {
        if (contains_member_using(residue, F, newest_res)) return false;
      }
      int pos = core - 1;
      while (pos >= 0 &&
             pick[static_cast<size_t>(pos)] ==
                 static_cast<int>(common.size()) - core + pos) {
        --pos;
      }
      if (pos < 0) break;
      ++pick[static_cast<size_t>(pos)];
      for (int j = pos + 1; j < core; ++j) {
        pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
      }
    }
    return true;
  };
  return run_search(n, spec.k, admits, opts);
}

std::vector<LiftIdentityRow> lifting_identity_table(const LiftedFamilySpec& spec, int n_min,
                                                    int n_max, const ExOptions& opts) {
  spec.validate();
  if (n_min > n_max) throw ParamError("empty range for the lifting identity");
  std::vector<LiftIdentityRow> rows;
  for (int n = n_min; n <= n_max; ++n) {
    LiftIdentityRow row;
    row.n_base = n;
    row.ex_base = exact_ex(n, spec.l, spec.base, opts).value;
    row.ex_lifted = exact_ex_lifted(n + spec.k - spec.l, spec, opts).value;
    row.equal = row.ex_base == row.ex_lifted;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace turan

#include "turan/tree.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "turan/errors.hpp"

namespace turan {

void TreeParams::validate() const {
  if (k < 2) throw ParamError("tree params violate k >= 2 (k=" + std::to_string(k) + ")");
  if (a < k - 1)
    throw ParamError("tree params violate a >= k-1 (a=" + std::to_string(a) +
                     ", k=" + std::to_string(k) + ")");
  if (b <= a)
    throw ParamError("tree params violate b > a (a=" + std::to_string(a) +
                     ", b=" + std::to_string(b) + ")");
  if (b < a - k + 3)
    throw ParamError("tree params violate b >= a-k+3 (a=" + std::to_string(a) +
                     ", b=" + std::to_string(b) + ", k=" + std::to_string(k) + ")");
}

RootedTree build_tree(const TreeParams& p) {
  p.validate();
  const int k = p.k, a = p.a, b = p.b;
  const int n_roots = p.root_count();
  const int n = a + n_roots;  // = b + k - 1

  RootedTree T;
  T.params = p;
  T.graph = Hypergraph(k, n);
  for (int i = 0; i < a; ++i) T.whites.push_back(i);
  for (int j = 0; j < n_roots; ++j) T.roots.push_back(a + j);

  // Red path: edge j covers whites j..j+k-1 (1-based); each one past the
  // first attaches to the k-1 whites it shares with its predecessor.
  for (int j = 1; j <= a - k + 1; ++j) {
    Edge e;
    for (int t = 0; t < k; ++t) e.push_back(j - 1 + t);
    std::vector<VertexId> attach;
    if (j > 1)
      for (int t = 0; t < k - 1; ++t) attach.push_back(j - 1 + t);
    T.graph.add_edge(e);
    T.build_order.push_back({e, attach});
  }

  // Green edges: root i sits on the k-1 whites starting at window(i).
  for (int i = 1; i <= n_roots; ++i) {
    long long window;
    if (i == n_roots) {
      window = a - k + 2;  // the formula below would land one past the end
    } else {
      window = 1 + static_cast<long long>(i - 1) * (a - k + 2) / (b - a + k - 2);
    }
    Edge e;
    e.push_back(a + i - 1);
    std::vector<VertexId> attach;
    for (int t = 0; t < k - 1; ++t) {
      e.push_back(static_cast<int>(window) - 1 + t);
      attach.push_back(static_cast<int>(window) - 1 + t);
    }
    // With no red edges (a = k-1) the first green edge seeds the hypertree.
    if (T.build_order.empty()) attach.clear();
    T.graph.add_edge(e);
    std::sort(e.begin(), e.end());
    T.build_order.push_back({e, attach});
  }

  // k-partition: whites cycle through the parts along the path; a root takes
  // the one part its k-1 whites leave uncovered.
  std::vector<int> parts(static_cast<size_t>(n), 0);
  for (int i = 0; i < a; ++i) parts[static_cast<size_t>(i)] = i % k;
  for (int i = 1; i <= n_roots; ++i) {
    long long window = (i == n_roots)
                           ? a - k + 2
                           : 1 + static_cast<long long>(i - 1) * (a - k + 2) / (b - a + k - 2);
    parts[static_cast<size_t>(a + i - 1)] = static_cast<int>((window + k - 2) % k);
  }
  T.graph.set_partition(std::move(parts));
  return T;
}

long long epsilon(const RootedTree& T, const std::vector<VertexId>& S) {
  std::set<VertexId> s;
  for (VertexId v : S) {
    if (v < 0 || v >= T.graph.n_vertices())
      throw ParamError("epsilon: vertex " + std::to_string(v) + " out of range");
    if (v >= T.params.a)
      throw ParamError("epsilon: vertex " + std::to_string(v) + " is a root, S must be whites");
    s.insert(v);
  }
  long long count = 0;
  for (const Edge& e : T.graph.edges()) {
    for (VertexId v : e) {
      if (s.count(v)) {
        ++count;
        break;
      }
    }
  }
  return count;
}

BalanceResult check_balanced(const RootedTree& T, int exhaustive_limit) {
  const int a = T.params.a;
  const long long b = T.params.b;
  if (a > exhaustive_limit)
    throw LimitError("balancedness scan limit is 2^" + std::to_string(exhaustive_limit) +
                         " subsets, tree has a=" + std::to_string(a) + " whites",
                     static_cast<std::uint64_t>(exhaustive_limit),
                     static_cast<std::uint64_t>(a));

  // Per-edge bitmask over whites; eps(S) is then a mask-intersection count.
  std::vector<std::uint32_t> edge_mask;
  edge_mask.reserve(T.graph.edges().size());
  for (const Edge& e : T.graph.edges()) {
    std::uint32_t m = 0;
    for (VertexId v : e)
      if (v < a) m |= (1u << v);
    edge_mask.push_back(m);
  }

  BalanceResult res;
  res.balanced = true;
  long long best_eps = -1, best_size = 0;
  for (std::uint32_t mask = 1; mask < (1u << a); ++mask) {
    long long eps = 0;
    for (std::uint32_t em : edge_mask)
      if (em & mask) ++eps;
    long long size = __builtin_popcount(mask);
    // eps/size < b/a, exactly?
    if (eps * a < size * b) res.balanced = false;
    if (best_eps < 0 || eps * best_size < best_eps * size) {
      best_eps = eps;
      best_size = size;
      res.worst_subset.clear();
      for (int v = 0; v < a; ++v)
        if (mask & (1u << v)) res.worst_subset.push_back(v);
    }
  }
  res.worst_eps = best_eps;
  return res;
}

namespace {

struct GluingClass {
  std::vector<int> copies;    // which copies contribute a white (ascending)
  std::vector<int> indices;   // that copy's white index, aligned with copies
  int residue = 0;            // common white index mod k
};

struct PowerScan {
  const RootedTree& T;
  int s;
  std::vector<int> copy_of_slot;    // slot -> copy id
  std::vector<int> index_of_slot;   // slot -> white index in [0, a)
  std::vector<GluingClass> classes;
  std::vector<std::vector<int>> raw;  // each: slot -> class id

  void recurse(size_t slot) {
    if (slot == copy_of_slot.size()) {
      std::vector<int> assignment(copy_of_slot.size());
      // Record class of each slot keyed by (copy, index), not scan position,
      // so downstream construction is independent of the scan order.
      for (size_t t = 0; t < copy_of_slot.size(); ++t)
        assignment[static_cast<size_t>(copy_of_slot[t]) * static_cast<size_t>(T.params.a) +
                   static_cast<size_t>(index_of_slot[t])] = slot_class_[t];
      raw.push_back(std::move(assignment));
      return;
    }
    int c = copy_of_slot[slot];
    int idx = index_of_slot[slot];
    // Deeper levels push new classes and may reallocate `classes`, so the
    // slot's class is re-indexed around the recursion instead of held by
    // reference.
    for (int ci = 0; ci < static_cast<int>(classes.size()); ++ci) {
      {
        const GluingClass& cl = classes[static_cast<size_t>(ci)];
        if (cl.residue != idx % T.params.k) continue;
        if (std::find(cl.copies.begin(), cl.copies.end(), c) != cl.copies.end()) continue;
      }
      classes[static_cast<size_t>(ci)].copies.push_back(c);
      classes[static_cast<size_t>(ci)].indices.push_back(idx);
      slot_class_.push_back(ci);
      recurse(slot + 1);
      slot_class_.pop_back();
      classes[static_cast<size_t>(ci)].copies.pop_back();
      classes[static_cast<size_t>(ci)].indices.pop_back();
    }
    classes.push_back({{c}, {idx}, idx % T.params.k});
    slot_class_.push_back(static_cast<int>(classes.size()) - 1);
    recurse(slot + 1);
    slot_class_.pop_back();
    classes.pop_back();
  }

  std::vector<int> slot_class_;
};

PowerMember member_from_assignment(const RootedTree& T, int s,
                                   const std::vector<int>& assignment) {
  const int k = T.params.k, a = T.params.a;
  const int n_roots = T.params.root_count();
  int n_classes = 0;
  for (int c : assignment) n_classes = std::max(n_classes, c + 1);

  // Renumber classes by first appearance in (copy, index) order so equal
  // partitions always produce the identical member.
  std::vector<int> dense(static_cast<size_t>(n_classes), -1);
  int next = 0;
  for (int c : assignment) {
    if (dense[static_cast<size_t>(c)] < 0) dense[static_cast<size_t>(c)] = next++;
  }

  PowerMember m;
  m.graph = Hypergraph(k, n_roots + next);
  for (int j = 0; j < n_roots; ++j) m.roots.push_back(j);
  m.copy_white_images.assign(static_cast<size_t>(s), {});
  for (int c = 0; c < s; ++c)
    for (int i = 0; i < a; ++i)
      m.copy_white_images[static_cast<size_t>(c)].push_back(
          n_roots + dense[static_cast<size_t>(assignment[static_cast<size_t>(c * a + i)])]);

  for (int c = 0; c < s; ++c) {
    for (const Edge& e : T.graph.edges()) {
      Edge img;
      for (VertexId v : e) {
        if (v < a)
          img.push_back(m.copy_white_images[static_cast<size_t>(c)][static_cast<size_t>(v)]);
        else
          img.push_back(v - a);  // root
      }
      m.graph.add_edge(img);
    }
  }

  std::vector<int> parts(static_cast<size_t>(n_roots + next));
  for (int j = 0; j < n_roots; ++j)
    parts[static_cast<size_t>(j)] = T.graph.part_of(a + j);
  for (int c = 0; c < s; ++c)
    for (int i = 0; i < a; ++i)
      parts[static_cast<size_t>(
          m.copy_white_images[static_cast<size_t>(c)][static_cast<size_t>(i)])] = i % k;
  m.graph.set_partition(std::move(parts));
  return m;
}

std::vector<std::vector<int>> raw_assignments(const RootedTree& T, int s,
                                              const std::vector<int>& copy_order) {
  PowerScan scan{T, s, {}, {}, {}, {}, {}};
  for (int c : copy_order)
    for (int i = 0; i < T.params.a; ++i) {
      scan.copy_of_slot.push_back(c);
      scan.index_of_slot.push_back(i);
    }
  scan.recurse(0);
  return std::move(scan.raw);
}

}  // namespace

std::vector<PowerMember> enumerate_power(const RootedTree& T, int s, const PowerOptions& opts) {
  if (s < 1) throw ParamError("power level s must be >= 1, got " + std::to_string(s));
  const long long slots = static_cast<long long>(s) * T.params.a;
  if (slots > opts.max_glued)
    throw LimitError("power enumeration limit is " + std::to_string(opts.max_glued) +
                         " glued whites, requested " + std::to_string(slots),
                     static_cast<std::uint64_t>(opts.max_glued),
                     static_cast<std::uint64_t>(slots));

  std::vector<int> copy_order = opts.copy_order;
  if (copy_order.empty())
    for (int c = 0; c < s; ++c) copy_order.push_back(c);
  {
    std::vector<int> sorted = copy_order;
    std::sort(sorted.begin(), sorted.end());
    for (int c = 0; c < s; ++c)
      if (static_cast<int>(sorted.size()) != s || sorted[static_cast<size_t>(c)] != c)
        throw ParamError("copy_order must be a permutation of the s copies");
  }

  const int n_roots = T.params.root_count();
  const int canon_limit = n_roots + slots < 10 ? 10 : n_roots + static_cast<int>(slots);

  // Canonical forms of every level below s, so members can be tagged with
  // the first level they appear at. Level t scans t copies in natural order;
  // the chosen copy_order only affects the top level's raw scan.
  std::vector<std::set<std::string>> level_forms;  // index: level-1
  for (int t = 1; t < s; ++t) {
    std::vector<int> nat;
    for (int c = 0; c < t; ++c) nat.push_back(c);
    std::set<std::string> forms;
    for (const auto& asg : raw_assignments(T, t, nat)) {
      PowerMember m = member_from_assignment(T, t, asg);
      forms.insert(canonical_form_pinned(m.graph, n_roots, canon_limit));
    }
    level_forms.push_back(std::move(forms));
  }

  auto tag_of = [&](const std::string& form) {
    for (int t = 1; t < s; ++t)
      if (level_forms[static_cast<size_t>(t - 1)].count(form)) return t;
    return s;
  };

  std::vector<PowerMember> out;
  if (opts.dedupe) {
    std::map<std::string, PowerMember> by_form;
    for (const auto& asg : raw_assignments(T, s, copy_order)) {
      PowerMember m = member_from_assignment(T, s, asg);
      std::string form = canonical_form_pinned(m.graph, n_roots, canon_limit);
      m.min_s = tag_of(form);
      by_form.emplace(std::move(form), std::move(m));
    }
    for (auto& [form, m] : by_form) out.push_back(std::move(m));
    std::stable_sort(out.begin(), out.end(),
                     [](const PowerMember& x, const PowerMember& y) { return x.min_s < y.min_s; });
  } else {
    for (const auto& asg : raw_assignments(T, s, copy_order)) {
      PowerMember m = member_from_assignment(T, s, asg);
      m.min_s = tag_of(canonical_form_pinned(m.graph, n_roots, canon_limit));
      out.push_back(std::move(m));
    }
  }
  return out;
}

bool check_edge_bound(const PowerMember& H, const TreeParams& p) {
  const long long e = H.graph.n_edges();
  const long long m = H.graph.n_vertices() - static_cast<long long>(H.roots.size());
  return e * p.a >= m * p.b;
}

}  // namespace turan

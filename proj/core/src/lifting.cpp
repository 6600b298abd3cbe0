#include "turan/lifting.hpp"

#include <algorithm>
#include <string>

#include "turan/errors.hpp"

namespace turan {

namespace {

bool has_disjoint_edge_pair(const Hypergraph& F) {
  for (int i = 0; i < F.n_edges(); ++i) {
    for (int j = i + 1; j < F.n_edges(); ++j) {
      const Edge& a = F.edge(i);
      const Edge& b = F.edge(j);
      std::vector<VertexId> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::back_inserter(common));
      if (common.empty()) return true;
    }
  }
  return false;
}

}  // namespace

void LiftedFamilySpec::validate() const {
  if (l < 2) throw ParamError("source arity must satisfy l >= 2 (l=" + std::to_string(l) + ")");
  if (k <= l) {
    throw ParamError("target arity must satisfy k > l (k=" + std::to_string(k) +
                     ", l=" + std::to_string(l) + ")");
  }
  if (base.empty()) throw ParamError("base family is empty");
  for (size_t i = 0; i < base.size(); ++i) {
    if (base[i].k() != l) {
      throw ParamError("base member " + std::to_string(i) + " is not " + std::to_string(l) +
                       "-uniform");
    }
    if (!has_disjoint_edge_pair(base[i])) {
      throw ParamError("base member " + std::to_string(i) +
                       " has no pair of disjoint edges");
    }
  }
}

Hypergraph lift_member(const Hypergraph& F, int k) {
  if (k <= F.k()) throw ParamError("lift target arity must exceed the member arity");
  const int extra = k - F.k();
  Hypergraph out(k, F.n_vertices() + extra);
  for (const Edge& e : F.edges()) {
    Edge lifted = e;
    for (int j = 0; j < extra; ++j) lifted.push_back(F.n_vertices() + j);
    out.add_edge(std::move(lifted));
  }
  return out;
}

bool lifted_freeness_check(const Hypergraph& G, const LiftedFamilySpec& spec) {
  spec.validate();
  if (G.k() != spec.k) throw ParamError("graph arity does not match the lifted family");
  if (G.n_edges() <= 1) return true;

  const int core = spec.k - spec.l;
  std::vector<VertexId> common = G.edge(0);
  for (int i = 1; i < G.n_edges(); ++i) {
    std::vector<VertexId> next;
    std::set_intersection(common.begin(), common.end(), G.edge(i).begin(), G.edge(i).end(),
                          std::back_inserter(next));
    common = std::move(next);
    if (static_cast<int>(common.size()) < core) return false;
  }

  // Every (k-l)-subset of the common intersection is a candidate apex set;
  // a base member inside its residue is a lifted copy. When the common
  // intersection is strictly larger than k-l the residues keep a shared
  // vertex in every edge, so members with disjoint edges cannot embed, but
  // the scan is cheap enough to run unconditionally.
  std::vector<int> pick(static_cast<size_t>(core));
  for (int i = 0; i < core; ++i) pick[static_cast<size_t>(i)] = i;
  while (true) {
    std::vector<VertexId> apex;
    for (int i : pick) apex.push_back(common[static_cast<size_t>(i)]);

    Hypergraph residue(spec.l, G.n_vertices());
    for (const Edge& e : G.edges()) {
      Edge r;
      for (VertexId v : e) {
        if (!std::binary_search(apex.begin(), apex.end(), v)) r.push_back(v);
      }
      residue.add_edge(std::move(r));
    }
    if (contains_any(residue, spec.base)) return false;

    // Next core-subset of the common intersection, colex odometer.
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
}

Hypergraph build_sunflower(int k, int t, int n) {
  if (k < 2) throw ParamError("sunflower arity must be at least 2");
  if (t < 0 || t >= k) {
    throw ParamError("kernel size must satisfy 0 <= t <= k-1 (t=" + std::to_string(t) + ")");
  }
  if (n < k) throw ParamError("sunflower needs n >= k vertices");
  const int petals = (n - t) / (k - t);
  Hypergraph g(k, n);
  for (int i = 0; i < petals; ++i) {
    Edge e;
    for (int j = 0; j < t; ++j) e.push_back(j);
    for (int j = 0; j < k - t; ++j) e.push_back(t + i * (k - t) + j);
    g.add_edge(std::move(e));
  }
  return g;
}

}  // namespace turan

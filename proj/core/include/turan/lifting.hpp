#pragma once

#include <vector>

#include "turan/hypergraph.hpp"

namespace turan {

// An l-uniform forbidden family together with a target arity k > l. The
// lifted family consists of every base member with k-l shared apex vertices
// appended to all of its edges, plus (implicitly) every small edge set whose
// common intersection is too small to be of that shape.
struct LiftedFamilySpec {
  int k = 3;
  int l = 2;
  std::vector<Hypergraph> base;

  // k > l >= 2, every base member l-uniform with at least one pair of
  // disjoint edges.
  void validate() const;
};

// F with k - |F.k()| fresh apex vertices added to every edge. The apexes get
// the highest ids.
Hypergraph lift_member(const Hypergraph& F, int k);

// True iff G avoids the whole lifted family. The family itself is never
// materialized: G fails either because some few of its edges intersect in
// fewer than k-l common vertices (iteratively shrinking the running
// intersection shows at most l+2 edges suffice to witness this, so checking
// the intersection of all edges is equivalent), or because the l-uniform
// residue of some (k-l)-subset of the common intersection contains a base
// member.
bool lifted_freeness_check(const Hypergraph& G, const LiftedFamilySpec& spec);

// Kernel {0..t-1} plus floor((n-t)/(k-t)) disjoint petals on the next ids;
// any two edges intersect in exactly the kernel.
Hypergraph build_sunflower(int k, int t, int n);

}  // namespace turan

#pragma once

#include <string>
#include <vector>

#include "turan/algebraic.hpp"
#include "turan/hypergraph.hpp"
#include "turan/lifting.hpp"
#include "turan/poly.hpp"
#include "turan/tree.hpp"

namespace turan {

// Interchange formats used by every CLI subcommand. All emitters produce
// canonical text (stable key order, lex-sorted edges, no whitespace
// variation), so parse -> serialize -> parse is the identity and serialized
// artifacts are diffable across runs.

// {"k": int, "n": int, "edges": [[int,...],...], "partition": [int,...] | null}
std::string hypergraph_to_json(const Hypergraph& g);
Hypergraph hypergraph_from_json(const std::string& text);

// {"q": int, "vars": int, "d": int, "coeffs": [[[e...], v], ...]} in graded
// order, zero coefficients omitted.
std::string poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const std::string& text);

// {"roots": [...], "whites": [...], "build_order": [{"edge": [...],
// "attach": [...]}, ...]}
std::string tree_sidecar_json(const RootedTree& T);

std::string power_member_to_json(const PowerMember& m);
PowerMember power_member_from_json(const std::string& text);

// {"params": {...}, "polys": [...], "graph": {...}}. The loader rebuilds the
// graph from the polynomials and refuses input whose stored edge set
// disagrees, which doubles as a determinism audit of the construction.
std::string instance_to_json(const AlgebraicInstance& inst);
AlgebraicInstance instance_from_json(const std::string& text);

// {"k": int, "l": int, "members": [hypergraph, ...]}; l is omitted when all
// members share an arity equal to k (plain oracle families).
std::string family_to_json(const std::vector<Hypergraph>& members);
std::vector<Hypergraph> family_from_json(const std::string& text);
std::string lifted_family_to_json(const LiftedFamilySpec& spec);
LiftedFamilySpec lifted_family_from_json(const std::string& text);

}  // namespace turan

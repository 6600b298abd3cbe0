#include "turan/json_io.hpp"

#include <nlohmann/json.hpp>

#include "turan/errors.hpp"

namespace turan {

namespace {

using json = nlohmann::ordered_json;

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParamError("malformed JSON input");
  return j;
}

json hypergraph_to_obj(const Hypergraph& g) {
  json j;
  j["k"] = g.k();
  j["n"] = g.n_vertices();
  j["edges"] = json::array();
  for (const Edge& e : g.edges()) j["edges"].push_back(e);
  if (g.has_partition()) {
    j["partition"] = g.partition();
  } else {
    j["partition"] = nullptr;
  }
  return j;
}

Hypergraph hypergraph_from_obj(const json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("n") || !j.contains("edges")) {
    throw ParamError("hypergraph JSON needs k, n and edges fields");
  }
  Hypergraph g(j.at("k").get<int>(), j.at("n").get<int>());
  for (const auto& e : j.at("edges")) {
    g.add_edge(e.get<Edge>());
  }
  if (j.contains("partition") && !j.at("partition").is_null()) {
    g.set_partition(j.at("partition").get<std::vector<int>>());
  }
  return g;
}

json poly_to_obj(const MultiPoly& p) {
  json j;
  j["q"] = p.q;
  j["vars"] = p.num_vars;
  j["d"] = p.max_degree;
  j["coeffs"] = json::array();
  for (std::uint64_t r = 0; r < p.n_monomials(); ++r) {
    const std::uint32_t v = p.coeffs[static_cast<size_t>(r)];
    if (v == 0) continue;
    j["coeffs"].push_back(json::array({monomial_unrank(r, p.num_vars), v}));
  }
  return j;
}

MultiPoly poly_from_obj(const json& j) {
  if (!j.is_object() || !j.contains("q") || !j.contains("vars") || !j.contains("d")) {
    throw ParamError("polynomial JSON needs q, vars and d fields");
  }
  MultiPoly p = zero_poly(j.at("q").get<std::uint32_t>(), j.at("vars").get<int>(),
                          j.at("d").get<int>());
  if (!j.contains("coeffs")) return p;
  for (const auto& pair : j.at("coeffs")) {
    if (!pair.is_array() || pair.size() != 2) {
      throw ParamError("polynomial coefficient entries must be [exponents, value] pairs");
    }
    const std::vector<int> evec = pair.at(0).get<std::vector<int>>();
    if (static_cast<int>(evec.size()) != p.num_vars) {
      throw ParamError("exponent vector length does not match vars");
    }
    int total = 0;
    for (int e : evec) {
      if (e < 0) throw ParamError("negative exponent in polynomial JSON");
      total += e;
    }
    if (total > p.max_degree) throw ParamError("monomial degree exceeds d");
    const std::uint32_t v = pair.at(1).get<std::uint32_t>();
    if (v >= p.q) throw ParamError("coefficient not reduced mod q");
    p.coeffs[static_cast<size_t>(monomial_rank(evec))] = v;
  }
  return p;
}

json steps_to_obj(const std::vector<BuildStep>& steps) {
  json arr = json::array();
  for (const BuildStep& s : steps) {
    json o;
    o["edge"] = s.edge;
    o["attach"] = s.attach;
    arr.push_back(std::move(o));
  }
  return arr;
}

json member_to_obj(const PowerMember& m) {
  json j;
  j["graph"] = hypergraph_to_obj(m.graph);
  j["roots"] = m.roots;
  j["min_s"] = m.min_s;
  j["copy_white_images"] = json::array();
  for (const auto& w : m.copy_white_images) j["copy_white_images"].push_back(w);
  return j;
}

PowerMember member_from_obj(const json& j) {
  PowerMember m;
  m.graph = hypergraph_from_obj(j.at("graph"));
  m.roots = j.at("roots").get<std::vector<VertexId>>();
  m.min_s = j.at("min_s").get<int>();
  for (const auto& w : j.at("copy_white_images")) {
    m.copy_white_images.push_back(w.get<std::vector<VertexId>>());
  }
  return m;
}

}  // namespace

std::string hypergraph_to_json(const Hypergraph& g) { return hypergraph_to_obj(g).dump(2); }

Hypergraph hypergraph_from_json(const std::string& text) {
  return hypergraph_from_obj(parse(text));
}

std::string poly_to_json(const MultiPoly& p) { return poly_to_obj(p).dump(2); }

MultiPoly poly_from_json(const std::string& text) { return poly_from_obj(parse(text)); }

std::string tree_sidecar_json(const RootedTree& T) {
  json j;
  j["roots"] = T.roots;
  j["whites"] = T.whites;
  j["build_order"] = steps_to_obj(T.build_order);
  return j.dump(2);
}

std::string power_member_to_json(const PowerMember& m) { return member_to_obj(m).dump(2); }

PowerMember power_member_from_json(const std::string& text) {
  return member_from_obj(parse(text));
}

std::string instance_to_json(const AlgebraicInstance& inst) {
  json j;
  json p;
  p["k"] = inst.params.alg.k;
  p["a"] = inst.params.alg.a;
  p["b"] = inst.params.alg.b;
  p["q"] = inst.params.q;
  p["seed"] = inst.params.seed;
  p["s"] = inst.params.s;
  p["d"] = inst.params.d;
  j["params"] = std::move(p);
  j["polys"] = json::array();
  for (const MultiPoly& f : inst.polys) j["polys"].push_back(poly_to_obj(f));
  j["graph"] = hypergraph_to_obj(inst.graph);
  return j.dump(2);
}

AlgebraicInstance instance_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.contains("params") || !j.contains("polys")) {
    throw ParamError("instance JSON needs params and polys fields");
  }
  const json& p = j.at("params");
  AlgParams alg{p.at("k").get<int>(), p.at("a").get<int>(), p.at("b").get<int>()};
  ConstructionParams cp = ConstructionParams::make(alg, p.at("q").get<std::uint32_t>(),
                                                   p.at("seed").get<std::uint64_t>());
  if (p.contains("s")) cp.s = p.at("s").get<long long>();
  if (p.contains("d")) cp.d = p.at("d").get<long long>();
  std::vector<MultiPoly> polys;
  for (const auto& f : j.at("polys")) polys.push_back(poly_from_obj(f));
  AlgebraicInstance inst = build_instance_with_polys(cp, std::move(polys));
  if (j.contains("graph")) {
    const Hypergraph stored = hypergraph_from_obj(j.at("graph"));
    if (stored.edges() != inst.graph.edges() ||
        stored.n_vertices() != inst.graph.n_vertices()) {
      throw ParamError("stored edge set disagrees with the rebuilt instance");
    }
  }
  return inst;
}

std::string family_to_json(const std::vector<Hypergraph>& members) {
  json j;
  if (!members.empty()) j["k"] = members.front().k();
  j["members"] = json::array();
  for (const Hypergraph& m : members) j["members"].push_back(hypergraph_to_obj(m));
  return j.dump(2);
}

std::vector<Hypergraph> family_from_json(const std::string& text) {
  const json j = parse(text);
  std::vector<Hypergraph> out;
  if (j.is_array()) {
    for (const auto& m : j) out.push_back(hypergraph_from_obj(m));
    return out;
  }
  if (!j.contains("members")) throw ParamError("family JSON needs a members array");
  for (const auto& m : j.at("members")) out.push_back(hypergraph_from_obj(m));
  return out;
}

std::string lifted_family_to_json(const LiftedFamilySpec& spec) {
  json j;
  j["k"] = spec.k;
  j["l"] = spec.l;
  j["members"] = json::array();
  for (const Hypergraph& m : spec.base) j["members"].push_back(hypergraph_to_obj(m));
  return j.dump(2);
}

LiftedFamilySpec lifted_family_from_json(const std::string& text) {
  const json j = parse(text);
  LiftedFamilySpec spec;
  if (!j.contains("k") || !j.contains("l") || !j.contains("members")) {
    throw ParamError("lifted family JSON needs k, l and members");
  }
  spec.k = j.at("k").get<int>();
  spec.l = j.at("l").get<int>();
  for (const auto& m : j.at("members")) spec.base.push_back(hypergraph_from_obj(m));
  spec.validate();
  return spec;
}

}  // namespace turan

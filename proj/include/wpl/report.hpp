#pragma once

// JSON renderings shared by the CLI and tests. Every element is emitted in
// the element text syntax, so it parses back with parse_element.

#include <json.hpp>
#include <string>
#include <vector>

#include "wpl/bundles.hpp"
#include "wpl/element_syntax.hpp"
#include "wpl/k0.hpp"
#include "wpl/orbits.hpp"
#include "wpl/quiver.hpp"
#include "wpl/stable.hpp"

namespace wpl {

using nlohmann::json;

inline json weights_json(const WeightTriple& w) { return json::array({w[0], w[1], w[2]}); }

inline json elements_json(const std::vector<LElement>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

inline json k0_json(const K0Class& k) {
  return {{"basis", K0Basis(k.weights()).labels()}, {"coeffs", k.coeffs()}};
}

inline json bundle_json(const ExtensionBundle& e) {
  return {
      {"weights", weights_json(e.weights())},
      {"twist", to_string(e.twist())},
      {"interior", to_string(e.interior())},
      {"auslander", is_auslander(e)},
      {"canonical_rep", to_string(canonical_rep(e))},
      {"rank", rank(extension_bundle_class(e))},
      {"degree", degree(extension_bundle_class(e))},
      {"determinant", to_string(determinant(extension_bundle_class(e)))},
      {"slope", slope(e).to_string()},
      {"stability", to_string(stability(e))},
      {"cover", elements_json(projective_cover(e).items())},
      {"hull", elements_json(injective_hull(e).items())},
  };
}

inline json pic_orbits_json(const WeightTriple& w, const OrbitPartition& part, Int formula,
                            Int burnside) {
  json blocks = json::array();
  for (const auto& b : part.blocks) {
    json members = json::array();
    for (std::size_t k : b) members.push_back(to_string(part.elements[k]));
    blocks.push_back(members);
  }
  return {
      {"weights", weights_json(w)},
      {"count", part.count()},
      {"method", {{"formula", formula}, {"burnside", burnside}, {"brute", part.count()}}},
      {"fixed_counts", part.fixed_counts},
      {"blocks", blocks},
  };
}

inline json tau_orbits_json(const WeightTriple& w, const TauOrbitData& d, Int formula) {
  json blocks = json::array();
  for (const auto& b : d.blocks) {
    json members = json::array();
    for (const auto& [c, k] : b) {
      members.push_back(json::array({to_string(d.coset_reps[c]), to_string(d.interiors[k])}));
    }
    blocks.push_back(members);
  }
  const auto burnside = d.cosets * d.interior_count / 4;
  return {
      {"weights", weights_json(w)},
      {"count", d.count},
      {"method", {{"formula", formula}, {"burnside", burnside}, {"brute", d.count}}},
      {"cosets", elements_json(d.coset_reps)},
      {"free", d.free},
      {"klein_relations", d.klein_relations},
      {"blocks", blocks},
  };
}

inline json quiver_json(const Quiver& q, Int end_dim, bool extension_free) {
  const auto names = q.vertex_names();
  json vertices = json::array();
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    vertices.push_back({{"name", names[v]},
                        {"a", q.vertices[v].first},
                        {"b", q.vertices[v].second},
                        {"shift", to_string(q.shifts[v])}});
  }
  json arrows = json::array();
  for (const auto& a : q.arrows) {
    arrows.push_back({{"source", names[a.source]},
                      {"target", names[a.target]},
                      {"label", std::string(1, a.label)}});
  }
  json relations = json::array();
  for (const auto& r : q.relations) {
    json path = json::array();
    for (std::size_t v : r.vertices) path.push_back(names[v]);
    relations.push_back(
        {{"kind", r.kind == QuiverRelation::Kind::commutativity ? "commutativity" : "zero"},
         {"label", r.kind == QuiverRelation::Kind::commutativity ? "xy-yx"
                                                                  : std::string(1, r.label) + "^2"},
         {"vertices", path}});
  }
  return {{"kind", to_string(q.kind)},   {"vertices", vertices},
          {"arrows", arrows},            {"relations", relations},
          {"end_dim", end_dim},          {"extension_free", extension_free}};
}

}  // namespace wpl

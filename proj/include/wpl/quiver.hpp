#pragma once

// Endomorphism quivers with relations for the Auslander-bundle tilting
// objects T1 and T2, and their Graphviz rendering.

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "wpl/stable.hpp"

namespace wpl {

struct QuiverArrow {
  std::size_t source;
  std::size_t target;
  char label;  // 'x' (shift xbar_2) or 'y' (shift xbar_3)

  friend auto operator<=>(const QuiverArrow&, const QuiverArrow&) = default;
};

struct QuiverRelation {
  enum class Kind { commutativity, zero_square };
  Kind kind;
  // commutativity: {u, u + xbar_2, u + xbar_3, u + xbar_2 + xbar_3}
  // zero_square:   the three vertices of the length-2 path
  std::vector<std::size_t> vertices;
  char label = '\0';  // zero_square only

  std::string describe(const std::vector<std::string>& names) const {
    if (kind == Kind::commutativity) {
      return "xy-yx: " + names[vertices[0]] + " -> " + names[vertices[3]] + " via " +
             names[vertices[1]] + " and " + names[vertices[2]];
    }
    return std::string(1, label) + "^2=0: " + names[vertices[0]] + " -> " + names[vertices[1]] +
           " -> " + names[vertices[2]];
  }
};

struct Quiver {
  TiltingKind kind;
  std::vector<std::pair<Int, Int>> vertices;
  std::vector<LElement> shifts;
  std::vector<QuiverArrow> arrows;
  std::vector<QuiverRelation> relations;

  std::string vertex_name(std::size_t v) const {
    return "v_" + std::to_string(vertices[v].first) + "_" + std::to_string(vertices[v].second);
  }
  std::vector<std::string> vertex_names() const {
    std::vector<std::string> out;
    for (std::size_t v = 0; v < vertices.size(); ++v) out.push_back(vertex_name(v));
    return out;
  }

  std::size_t count_arrows(char label) const {
    return static_cast<std::size_t>(std::count_if(
        arrows.begin(), arrows.end(), [label](const QuiverArrow& a) { return a.label == label; }));
  }
  std::size_t count_relations(QuiverRelation::Kind k) const {
    return static_cast<std::size_t>(std::count_if(
        relations.begin(), relations.end(), [k](const QuiverRelation& r) { return r.kind == k; }));
  }
};

// Arrows are read off from shift differences: u -> v is x when v - u = xbar_2
// and y when v - u = xbar_3. Squares u, u+xbar_2, u+xbar_3, u+xbar_2+xbar_3
// carry xy - yx; a two-step path with a repeated label whose composite shift
// has no stable Hom carries x^2 = 0 or y^2 = 0.
inline Quiver build_quiver(const TiltingObject& t) {
  require_auslander_grid(t, "build_quiver");
  if (!check_extension_free(t).extension_free) {
    throw precondition_error("build_quiver: tilting object is not extension-free");
  }
  const WeightTriple& w = t.weights;
  const LElement bx = xbar(w, 1);
  const LElement by = xbar(w, 2);

  Quiver q{t.kind, t.grid, {}, {}, {}};
  std::map<LElement, std::size_t> at;
  for (std::size_t v = 0; v < t.summands.size(); ++v) {
    q.shifts.push_back(t.summands[v].twist());
    at.emplace(t.summands[v].twist(), v);
  }
  auto find = [&at](const LElement& s) -> std::optional<std::size_t> {
    auto it = at.find(s);
    if (it == at.end()) return std::nullopt;
    return it->second;
  };

  for (std::size_t u = 0; u < q.shifts.size(); ++u) {
    for (std::size_t v = 0; v < q.shifts.size(); ++v) {
      const LElement d = q.shifts[v] - q.shifts[u];
      if (d == bx) q.arrows.push_back({u, v, 'x'});
      if (d == by) q.arrows.push_back({u, v, 'y'});
    }
  }
  std::sort(q.arrows.begin(), q.arrows.end());

  for (std::size_t u = 0; u < q.shifts.size(); ++u) {
    const auto a = find(q.shifts[u] + bx);
    const auto b = find(q.shifts[u] + by);
    const auto c = find(q.shifts[u] + bx + by);
    if (a && b && c) {
      q.relations.push_back({QuiverRelation::Kind::commutativity, {u, *a, *b, *c}, '\0'});
    }
  }
  for (const QuiverArrow& first : q.arrows) {
    for (const QuiverArrow& second : q.arrows) {
      if (second.source != first.target || second.label != first.label) continue;
      if (auslander_hom_dim(q.shifts[second.target] - q.shifts[first.source]) == 0) {
        q.relations.push_back({QuiverRelation::Kind::zero_square,
                               {first.source, first.target, second.target},
                               first.label});
      }
    }
  }
  return q;
}

// Arrow set drawn in the grid pictures, from (a, b) coordinates alone:
// t1 has x: (a,b) -> (a+1,b) and y: (a,b) -> (a,b+1);
// t2 has y: (a,b) -> (a,b+1) and x: (a,b+1) -> (a+1,b).
inline std::vector<QuiverArrow> picture_arrows(const Quiver& q, Int p, Int qq) {
  std::map<std::pair<Int, Int>, std::size_t> at;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) at.emplace(q.vertices[v], v);
  std::vector<QuiverArrow> out;
  auto add = [&](std::pair<Int, Int> s, std::pair<Int, Int> d, char label) {
    out.push_back({at.at(s), at.at(d), label});
  };
  for (Int a = 0; a <= qq - 2; ++a) {
    for (Int b = 0; b <= p - 2; ++b) {
      if (b + 1 <= p - 2) add({a, b}, {a, b + 1}, 'y');
      if (a + 1 <= qq - 2) {
        if (q.kind == TiltingKind::t1) {
          add({a, b}, {a + 1, b}, 'x');
        } else if (b + 1 <= p - 2) {
          add({a, b + 1}, {a + 1, b}, 'x');
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool matches_picture(const Quiver& q, const WeightTriple& w) {
  return q.arrows == picture_arrows(q, w[1], w[2]);
}

// Byte-stable Graphviz output: vertices in grid order, arrows sorted,
// relations in a trailing comment block.
inline std::string to_dot(const Quiver& q, const WeightTriple& w) {
  const auto names = q.vertex_names();
  std::ostringstream os;
  os << "digraph " << to_string(q.kind) << " {\n";
  os << "  // weights " << w.to_string() << "\n";
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    os << "  " << names[v] << " [label=\"(" << q.vertices[v].first << "," << q.vertices[v].second
       << ")\"];\n";
  }
  for (const QuiverArrow& a : q.arrows) {
    os << "  " << names[a.source] << " -> " << names[a.target] << " [label=\"" << a.label
       << "\"];\n";
  }
  os << "  /* relations\n";
  for (const QuiverRelation& r : q.relations) os << "     " << r.describe(names) << "\n";
  os << "  */\n";
  os << "}\n";
  return os.str();
}

}  // namespace wpl

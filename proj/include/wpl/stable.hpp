#pragma once

// Arithmetic of the stable category of vector bundles: suspension of
// extension bundles, stable Hom between twisted Auslander bundles, and the
// tilting objects T_cub, T1, T2.

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wpl/bundles.hpp"
#include "wpl/extension_bundle.hpp"
#include "wpl/lgroup.hpp"

namespace wpl {

// E<x>(t)[1] = E<(p_i - 2 - l_i) x_i + sum_{j != i} l_j x_j>(t + (l_i + 1) x_i).
inline ExtensionBundle suspend(const ExtensionBundle& e, int axis) {
  if (axis < 0 || axis >= kAxes) throw std::out_of_range("axis must be 0, 1 or 2");
  const WeightTriple& w = e.weights();
  const LElement& x = e.interior();
  std::array<Int, 3> l = x.coords();
  l[axis] = w[axis] - 2 - l[axis];
  return ExtensionBundle(e.twist() + (x.coord(axis) + 1) * LElement::generator(w, axis),
                         LElement::normalize(w, l[0], l[1], l[2], 0));
}

inline void require_weight_two_first(const WeightTriple& w, const char* op) {
  if (w[0] != 2) throw precondition_error(std::string(op) + " requires weight type (2,p,q)");
}

// For (2,p,q): every suspension of every E<x> is E<x>(x1).
inline bool suspension_is_x1_twist_check(const WeightTriple& w) {
  require_weight_two_first(w, "suspension_is_x1_twist_check");
  const LElement x1 = LElement::generator(w, 0);
  for (const LElement& x : interiors(w)) {
    const ExtensionBundle e = ExtensionBundle::untwisted(x);
    for (int i = 0; i < kAxes; ++i) {
      if (!iso_test_general(suspend(e, i), e.twisted(x1))) return false;
    }
  }
  return true;
}

// dim Hom(E, E(shift)) in the stable category for an Auslander bundle E:
// 1 for shift in {0, xbar_1, xbar_2, xbar_3}, else 0.
inline int auslander_hom_dim(const LElement& shift) {
  if (shift.is_zero()) return 1;
  for (int j = 0; j < kAxes; ++j) {
    if (shift == xbar(shift.weights(), j)) return 1;
  }
  return 0;
}

// {n : Hom(E(u), E(v)[n]) != 0} for weight type (2,p,q), where [1] is the
// x1-twist. Each target s in {0, xbar_j} yields at most one candidate n,
// fixed by the degree: delta(v - u) + n delta(x1) = delta(s).
inline std::set<Int> hom_degrees(const LElement& u, const LElement& v) {
  const WeightTriple& w = u.weights();
  require_weight_two_first(w, "hom_degrees");
  const LElement d = v - u;
  const LElement x1 = LElement::generator(w, 0);
  const Int dx1 = delta(x1);
  std::vector<LElement> targets{LElement::zero(w)};
  for (int j = 0; j < kAxes; ++j) targets.push_back(xbar(w, j));

  std::set<Int> out;
  for (const LElement& s : targets) {
    const Int gap = delta(s) - delta(d);
    if (gap % dx1 != 0) continue;
    const Int n = gap / dx1;
    if (d + n * x1 == s) out.insert(n);
  }
  return out;
}

enum class TiltingKind { cub, t1, t2 };

inline const char* to_string(TiltingKind k) {
  switch (k) {
    case TiltingKind::cub: return "cub";
    case TiltingKind::t1: return "t1";
    case TiltingKind::t2: return "t2";
  }
  return "?";
}

inline TiltingKind parse_tilting_kind(const std::string& s) {
  if (s == "cub") return TiltingKind::cub;
  if (s == "t1") return TiltingKind::t1;
  if (s == "t2") return TiltingKind::t2;
  throw std::invalid_argument("unknown tilting kind '" + s + "' (expected cub, t1 or t2)");
}

struct TiltingObject {
  WeightTriple weights;
  TiltingKind kind;
  std::vector<ExtensionBundle> summands;
  // (a, b) grid position for t1/t2; for cub, the interior's (l1, l2, l3) is
  // the natural label and grid stays empty.
  std::vector<std::pair<Int, Int>> grid;
};

// cub: E<x> for all interiors x.
// t1:  E(a xbar_2 + b xbar_3), 0 <= a <= q-2, 0 <= b <= p-2 for weights (2,p,q).
// t2:  E(a xbar_1 + b xbar_3), same ranges.
inline TiltingObject build_tilting(const WeightTriple& w, TiltingKind kind) {
  TiltingObject t{w, kind, {}, {}};
  if (kind == TiltingKind::cub) {
    for (const LElement& x : interiors(w)) t.summands.push_back(ExtensionBundle::untwisted(x));
    return t;
  }
  require_weight_two_first(w, "build_tilting(t1/t2)");
  const Int p = w[1], q = w[2];
  const LElement first = xbar(w, kind == TiltingKind::t1 ? 1 : 0);
  const LElement second = xbar(w, 2);
  for (Int a = 0; a <= q - 2; ++a) {
    for (Int b = 0; b <= p - 2; ++b) {
      t.summands.push_back(ExtensionBundle::auslander(w, a * first + b * second));
      t.grid.emplace_back(a, b);
    }
  }
  return t;
}

inline bool summands_pairwise_non_isomorphic(const TiltingObject& t) {
  for (std::size_t i = 0; i < t.summands.size(); ++i)
    for (std::size_t j = i + 1; j < t.summands.size(); ++j)
      if (iso_test_general(t.summands[i], t.summands[j])) return false;
  return true;
}

inline void require_auslander_grid(const TiltingObject& t, const char* op) {
  if (t.kind == TiltingKind::cub) {
    throw precondition_error(std::string(op) +
                             ": unsupported for cub, requires general Hom formula");
  }
}

struct ExtensionViolation {
  std::size_t source;
  std::size_t target;
  Int degree;
};

struct ExtensionFreeCertificate {
  bool extension_free = true;
  std::size_t pairs_checked = 0;
  std::vector<ExtensionViolation> violations;
};

// Hom(T, T[n]) = 0 for all n != 0, checked over every ordered summand pair.
inline ExtensionFreeCertificate check_extension_free(const TiltingObject& t) {
  require_auslander_grid(t, "check_extension_free");
  ExtensionFreeCertificate cert;
  for (std::size_t i = 0; i < t.summands.size(); ++i) {
    for (std::size_t j = 0; j < t.summands.size(); ++j) {
      ++cert.pairs_checked;
      for (Int n : hom_degrees(t.summands[i].twist(), t.summands[j].twist())) {
        if (n != 0) cert.violations.push_back({i, j, n});
      }
    }
  }
  cert.extension_free = cert.violations.empty();
  return cert;
}

// Ordered summand pairs (u, v) with Hom(E(u), E(v)) != 0.
inline Int end_dimension(const TiltingObject& t) {
  require_auslander_grid(t, "end_dimension");
  Int dim = 0;
  for (const auto& a : t.summands)
    for (const auto& b : t.summands) dim += auslander_hom_dim(b.twist() - a.twist());
  return dim;
}

}  // namespace wpl

#pragma once

// Orbits of extension bundles under line-bundle twist (Picard action) and
// under the Auslander-Reiten translate tau = twist by omega. Both reduce to
// the Klein four-group {id, sigma_1, sigma_2, sigma_3} acting on interiors.

#include <array>
#include <cstdlib>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wpl/bundles.hpp"
#include "wpl/extension_bundle.hpp"
#include "wpl/lgroup.hpp"
#include "wpl/quotient.hpp"
#include "wpl/union_find.hpp"

namespace wpl {

// The interior part of the Klein action. Swappable so that verification
// code can be fed a deliberately broken action.
using SigmaMap = std::function<LElement(const LElement&, int)>;

inline const SigmaMap& standard_sigma() {
  static const SigmaMap s = [](const LElement& x, int j) { return klein_sigma(x, j); };
  return s;
}

struct OrbitPartition {
  std::vector<LElement> elements;
  std::vector<std::vector<std::size_t>> blocks;
  // |S^g| for g = id, sigma_1, sigma_2, sigma_3.
  std::array<Int, 4> fixed_counts{0, 0, 0, 0};

  std::size_t count() const { return blocks.size(); }
};

namespace detail {
inline int even_weight_count(const WeightTriple& w) {
  int m = 0;
  for (int i = 0; i < kAxes; ++i) m += (w[i] % 2 == 0) ? 1 : 0;
  return m;
}
}  // namespace detail

// Closed form in terms of the number m of even weights.
inline Int pic_orbit_count_formula(const WeightTriple& w) {
  const Int s = w.interior_count();
  const int m = detail::even_weight_count(w);
  Int numer = s;
  if (m == 2) {
    for (int j = 0; j < kAxes; ++j) {
      if (w[j] % 2 != 0) numer += w[j] - 1;
    }
  } else if (m == 3) {
    numer += (w[0] - 1) + (w[1] - 1) + (w[2] - 1);
  }
  if (numer % 4 != 0) {
    throw std::logic_error("orbit formula not integral for " + w.to_string());
  }
  return numer / 4;
}

// |S^{sigma_j}| = p_j - 1 when both other weights are even, else 0.
inline Int fixed_point_rule(const WeightTriple& w, int j) {
  for (int i = 0; i < kAxes; ++i) {
    if (i != j && w[i] % 2 != 0) return 0;
  }
  return w[j] - 1;
}

inline std::array<Int, 3> sigma_fixed_counts(const WeightTriple& w,
                                             const SigmaMap& sigma = standard_sigma()) {
  std::array<Int, 3> out{0, 0, 0};
  for (const LElement& x : interiors(w)) {
    for (int j = 0; j < kAxes; ++j) {
      if (sigma(x, j) == x) ++out[j];
    }
  }
  return out;
}

// (|S| + sum_j |S^{sigma_j}|) / 4 with the fixed points found by scanning.
inline Int pic_orbit_count_burnside(const WeightTriple& w, const SigmaMap& sigma = standard_sigma()) {
  const auto fixed = sigma_fixed_counts(w, sigma);
  const Int total = w.interior_count() + fixed[0] + fixed[1] + fixed[2];
  if (total % 4 != 0) {
    throw std::logic_error("Burnside sum not divisible by |G| for " + w.to_string());
  }
  return total / 4;
}

inline OrbitPartition pic_orbit_partition(const WeightTriple& w,
                                          const SigmaMap& sigma = standard_sigma()) {
  OrbitPartition out;
  out.elements = interiors(w);
  UnionFind uf(out.elements.size());
  out.fixed_counts[0] = static_cast<Int>(out.elements.size());
  for (std::size_t k = 0; k < out.elements.size(); ++k) {
    for (int j = 0; j < kAxes; ++j) {
      const LElement image = sigma(out.elements[k], j);
      if (!is_interior(image)) throw std::logic_error("sigma leaves the interior set");
      if (image == out.elements[k]) ++out.fixed_counts[j + 1];
      uf.unite(k, interior_index(image));
    }
  }
  out.blocks = uf.blocks();
  return out;
}

inline bool is_transitive(const WeightTriple& w) { return pic_orbit_count_formula(w) == 1; }

// {sum a_i x_i + a c : 0 <= a_i <= p_i - 1, lo <= a <= hi}. With lo = -2 and
// hi = 2 this contains every twist that can witness an isomorphism between
// two untwisted extension bundles.
inline std::vector<LElement> bounded_twist_grid(const WeightTriple& w, Int lo = -2, Int hi = 2) {
  std::vector<LElement> out;
  for (Int a = lo; a <= hi; ++a)
    for (Int a1 = 0; a1 < w[0]; ++a1)
      for (Int a2 = 0; a2 < w[1]; ++a2)
        for (Int a3 = 0; a3 < w[2]; ++a3) out.push_back(LElement::normalize(w, a1, a2, a3, a));
  return out;
}

struct PartitionIsoReport {
  bool ok = true;
  std::string failure;
};

// Members of one block must be twists of each other, witnessed on the grid;
// members of different blocks must admit no witnessing twist on the grid.
inline PartitionIsoReport verify_partition_by_iso(const OrbitPartition& part,
                                                  const std::vector<LElement>& grid) {
  PartitionIsoReport rep;
  std::vector<std::size_t> block_of(part.elements.size());
  for (std::size_t b = 0; b < part.blocks.size(); ++b)
    for (std::size_t k : part.blocks[b]) block_of[k] = b;

  for (std::size_t a = 0; a < part.elements.size(); ++a) {
    for (std::size_t b = 0; b < part.elements.size(); ++b) {
      bool witnessed = false;
      for (const LElement& z : grid) {
        if (iso_test(part.elements[a], part.elements[b], z)) {
          witnessed = true;
          break;
        }
      }
      if (witnessed != (block_of[a] == block_of[b])) {
        rep.ok = false;
        rep.failure = "interiors " + to_string(part.elements[a]) + " and " +
                      to_string(part.elements[b]) +
                      (witnessed ? " are twists of each other across blocks"
                                 : " share a block but no twist relates them");
        return rep;
      }
    }
  }
  return rep;
}

// |(1/4)(1 - sum 1/p_i) prod p_i (p_i - 1)|.
inline Int tau_orbit_count_formula(const WeightTriple& w) {
  require_non_tubular(w, "tau_orbit_count_formula");
  const Int numer = omega_index_formula(w) * w.interior_count();
  if (numer % 4 != 0) throw std::logic_error("tau orbit formula not integral for " + w.to_string());
  return numer / 4;
}

// Klein action lifted to (L / Z omega) x interiors:
//   sigma_j(Lbar, x) = (Lbar + sum_{i != j} l_i x_i - x_j, sigma_j(x)).
struct TauOrbitData {
  std::size_t cosets = 0;
  std::size_t interior_count = 0;
  std::size_t count = 0;
  // No point is fixed by any sigma_j.
  bool free = true;
  // sigma_j^2 = id and sigma_i sigma_j = sigma_k hold pointwise.
  bool klein_relations = true;
  std::vector<LElement> coset_reps;
  std::vector<LElement> interiors;
  // Members are (coset index, interior index).
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> blocks;
};

inline LElement lifted_sigma_twist(const LElement& x, int j) {
  const WeightTriple& w = x.weights();
  std::array<Int, 3> l{0, 0, 0};
  for (int i = 0; i < kAxes; ++i) l[i] = (i == j) ? -1 : x.coord(i);
  return LElement::normalize(w, l[0], l[1], l[2], 0);
}

inline TauOrbitData tau_orbit_partition(const WeightTriple& w,
                                        const SigmaMap& sigma = standard_sigma()) {
  const OmegaQuotient quotient(w);
  TauOrbitData out;
  out.coset_reps = quotient.representatives();
  out.interiors = interiors(w);
  out.cosets = out.coset_reps.size();
  out.interior_count = out.interiors.size();
  const std::size_t n = out.cosets * out.interior_count;

  // Each point's image under sigma_1..3, as flat indices.
  std::vector<std::array<std::size_t, 3>> image(n);
  for (std::size_t c = 0; c < out.cosets; ++c) {
    for (std::size_t k = 0; k < out.interior_count; ++k) {
      const LElement& x = out.interiors[k];
      for (int j = 0; j < kAxes; ++j) {
        const LElement y = sigma(x, j);
        if (!is_interior(y)) throw std::logic_error("sigma leaves the interior set");
        const std::size_t c2 = quotient.index_of(out.coset_reps[c] + lifted_sigma_twist(x, j));
        image[c * out.interior_count + k][j] = c2 * out.interior_count + interior_index(y);
      }
    }
  }

  UnionFind uf(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (int j = 0; j < kAxes; ++j) {
      const std::size_t img = image[v][j];
      if (img == v) out.free = false;
      if (image[img][j] != v) out.klein_relations = false;
      const int i = (j + 1) % kAxes, k = (j + 2) % kAxes;
      if (image[image[v][j]][i] != image[v][k]) out.klein_relations = false;
      uf.unite(v, img);
    }
  }
  for (const auto& block : uf.blocks()) {
    std::vector<std::pair<std::size_t, std::size_t>> members;
    for (std::size_t v : block) members.emplace_back(v / out.interior_count, v % out.interior_count);
    out.blocks.push_back(std::move(members));
  }
  out.count = out.blocks.size();
  return out;
}

inline Int tau_orbit_count_brute(const WeightTriple& w) {
  return static_cast<Int>(tau_orbit_partition(w).count);
}

// pi(sigma_j(L, x)) ~ tau(pi(L, x)) for every j, where tau is the twist by
// omega: E<sigma_j x>(t + sum_{i != j} l_i x_i - x_j) ~ E<x>(t + omega).
inline bool sigma_compatibility_check(const LElement& t, const LElement& x) {
  const WeightTriple& w = x.weights();
  const ExtensionBundle target(t + omega(w), x);
  for (int j = 0; j < kAxes; ++j) {
    const ExtensionBundle lifted(t + lifted_sigma_twist(x, j), klein_sigma(x, j));
    if (!iso_test_general(lifted, target)) return false;
  }
  return true;
}

}  // namespace wpl

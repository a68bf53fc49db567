#pragma once

// Formula-versus-oracle sweeps over all weight triples
// 2 <= p1 <= p2 <= p3 <= max_weight. Each suite returns the first failure it
// sees per triple; the report lists them in triple order.

#include <map>
#include <random>
#include <string>
#include <vector>

#include "wpl/bundles.hpp"
#include "wpl/k0.hpp"
#include "wpl/orbits.hpp"
#include "wpl/quiver.hpp"
#include "wpl/stable.hpp"

namespace wpl {

inline std::vector<WeightTriple> sorted_triples(Int max_weight) {
  std::vector<WeightTriple> out;
  for (Int a = 2; a <= max_weight; ++a)
    for (Int b = a; b <= max_weight; ++b)
      for (Int c = b; c <= max_weight; ++c) out.emplace_back(a, b, c);
  return out;
}

// Empty string on success, otherwise a description of the first failure.
using CheckOutcome = std::string;

namespace checks {

inline CheckOutcome orbit_agreement(const WeightTriple& w, const SigmaMap& sigma,
                                    bool verify_by_iso) {
  const Int formula = pic_orbit_count_formula(w);
  Int burnside = 0;
  try {
    burnside = pic_orbit_count_burnside(w, sigma);
  } catch (const std::logic_error& e) {
    return e.what();
  }
  const OrbitPartition part = pic_orbit_partition(w, sigma);
  const auto brute = static_cast<Int>(part.count());
  if (formula != burnside || formula != brute) {
    return "orbit counts disagree: formula " + std::to_string(formula) + ", burnside " +
           std::to_string(burnside) + ", partition " + std::to_string(brute);
  }
  if (formula > w.interior_count()) return "orbit count exceeds prod(p_i - 1)";
  if (verify_by_iso) {
    const auto rep = verify_partition_by_iso(part, bounded_twist_grid(w));
    if (!rep.ok) return rep.failure;
  }
  return {};
}

inline CheckOutcome fixed_point_law(const WeightTriple& w, const SigmaMap& sigma) {
  const auto scanned = sigma_fixed_counts(w, sigma);
  for (int j = 0; j < kAxes; ++j) {
    if (scanned[j] != fixed_point_rule(w, j)) {
      return "sigma_" + std::to_string(j + 1) + " fixes " + std::to_string(scanned[j]) +
             " interiors, rule says " + std::to_string(fixed_point_rule(w, j));
    }
  }
  return {};
}

// iso_test(x, y, z) against equality of Grothendieck classes, exhaustively
// over interiors x, y and the bounded twist grid; plus Auslander detection
// against the orbit of 0.
inline CheckOutcome iso_vs_k0(const WeightTriple& w) {
  const auto xs = interiors(w);
  const auto grid = bounded_twist_grid(w);
  const LElement om = omega(w);

  std::map<std::vector<Int>, std::size_t> class_to_x;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    class_to_x.emplace((line_bundle_class(om) + line_bundle_class(xs[k])).coeffs(), k);
  }
  for (const LElement& y : xs) {
    for (const LElement& z : grid) {
      const auto hit =
          class_to_x.find((line_bundle_class(om + z) + line_bundle_class(y + z)).coeffs());
      for (std::size_t k = 0; k < xs.size(); ++k) {
        const bool by_class = hit != class_to_x.end() && hit->second == k;
        if (iso_test(xs[k], y, z) != by_class) {
          return "E<" + to_string(xs[k]) + "> vs E<" + to_string(y) + ">(" + to_string(z) +
                 "): criterion " + (by_class ? "false" : "true") + ", K0 " +
                 (by_class ? "true" : "false");
        }
      }
    }
  }
  for (const LElement& x : xs) {
    const ExtensionBundle e = ExtensionBundle::untwisted(x);
    if (is_auslander(e) != canonical_rep(x).is_zero()) {
      return "Auslander detection disagrees with orbit of 0 at " + to_string(x);
    }
  }
  return {};
}

// Partitions of {E<x>(t)} (t on a bounded grid) by isomorphism, by projective
// cover and by injective hull must coincide.
inline CheckOutcome cover_hull_classification(const WeightTriple& w, Int lo = -1, Int hi = 1) {
  std::vector<ExtensionBundle> bundles;
  for (const LElement& t : bounded_twist_grid(w, lo, hi))
    for (const LElement& x : interiors(w)) bundles.emplace_back(t, x);
  const std::size_t n = bundles.size();

  // Isomorphic bundles share their determinant; compare pairwise inside buckets.
  std::map<LElement, std::vector<std::size_t>> by_det;
  for (std::size_t k = 0; k < n; ++k) {
    by_det[determinant(extension_bundle_class(bundles[k]))].push_back(k);
  }
  UnionFind iso(n);
  for (const auto& [det, members] : by_det) {
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b)
        if (iso_test_general(bundles[members[a]], bundles[members[b]]))
          iso.unite(members[a], members[b]);
  }

  std::vector<std::size_t> iso_label(n), cover_label(n), hull_label(n);
  std::map<BundleSummandList, std::size_t> first_cover, first_hull;
  for (std::size_t k = 0; k < n; ++k) {
    iso_label[k] = iso.find(k);
    cover_label[k] = first_cover.emplace(projective_cover(bundles[k]), k).first->second;
    hull_label[k] = first_hull.emplace(injective_hull(bundles[k]), k).first->second;
  }
  // Same partition iff "same block as" agrees for every pair with a block's first member.
  std::vector<std::size_t> iso_first(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (iso_first[iso_label[k]] == n) iso_first[iso_label[k]] = k;
    const std::size_t f = iso_first[iso_label[k]];
    if (cover_label[k] != f) {
      return "cover partition differs from iso partition at " + bundles[k].to_string();
    }
    if (hull_label[k] != f) {
      return "hull partition differs from iso partition at " + bundles[k].to_string();
    }
  }
  return {};
}

// Tubular stability tables: stable iff sum l_i in {1,3} for (3,3,3);
// l3 not in {0,4} for (2,3,6); l_i = 1 for i in {2,3} for (2,4,4).
inline std::optional<bool> tubular_table_entry(const LElement& x) {
  const auto& p = x.weights().weights();
  if (p == std::array<Int, 3>{3, 3, 3}) {
    const Int s = x.coord(0) + x.coord(1) + x.coord(2);
    return s == 1 || s == 3;
  }
  if (p == std::array<Int, 3>{2, 3, 6}) return x.coord(2) != 0 && x.coord(2) != 4;
  if (p == std::array<Int, 3>{2, 4, 4}) return x.coord(1) == 1 || x.coord(2) == 1;
  return std::nullopt;
}

inline CheckOutcome stability_trichotomy(const WeightTriple& w) {
  const WeightClass k = classify(w);
  bool some_not_semistable = false;
  for (const LElement& x : interiors(w)) {
    const Stability s = stability(x);
    some_not_semistable = some_not_semistable || s == Stability::not_semistable;
    if (k == WeightClass::domestic && s != Stability::stable) {
      return "domestic but " + to_string(x) + " is " + to_string(s);
    }
    if (k == WeightClass::tubular) {
      if (s == Stability::not_semistable) return "tubular but " + to_string(x) + " unstable";
      const bool stable = s == Stability::stable;
      if (stable == is_auslander(ExtensionBundle::untwisted(x))) {
        return "tubular: stable should mean non-Auslander at " + to_string(x);
      }
      if (auto expected = tubular_table_entry(x); expected && *expected != stable) {
        return "tubular table mismatch at " + to_string(x);
      }
    }
  }
  if (k == WeightClass::wild && !some_not_semistable) return "wild but every interior semistable";
  return {};
}

inline CheckOutcome tau_agreement(const WeightTriple& w, const SigmaMap& sigma,
                                  std::size_t compat_samples = 100) {
  if (classify(w) == WeightClass::tubular) return {};
  const TauOrbitData d = tau_orbit_partition(w, sigma);
  const Int formula = tau_orbit_count_formula(w);
  const auto free_count = static_cast<Int>(d.cosets * d.interior_count / 4);
  if (static_cast<Int>(d.count) != formula || formula != free_count) {
    return "tau counts disagree: formula " + std::to_string(formula) + ", brute " +
           std::to_string(d.count) + ", |cosets||S|/4 " + std::to_string(free_count);
  }
  if (static_cast<Int>(d.cosets) != omega_index_formula(w)) {
    return "coset count differs from index formula";
  }
  if (!d.free) return "lifted Klein action has a fixed point";
  if (!d.klein_relations) return "lifted Klein action violates the Klein relations";

  std::mt19937_64 rng(0x5eedULL ^ static_cast<std::uint64_t>(w.product()));
  const auto xs = interiors(w);
  std::uniform_int_distribution<std::size_t> pick(0, xs.size() - 1);
  std::uniform_int_distribution<Int> coeff(-20, 20);
  for (std::size_t s = 0; s < compat_samples; ++s) {
    const LElement t = LElement::normalize(w, coeff(rng), coeff(rng), coeff(rng), coeff(rng));
    const LElement& x = xs[pick(rng)];
    if (!sigma_compatibility_check(t, x)) {
      return "lifted sigma is not compatible with tau at t=" + to_string(t) + ", x=" + to_string(x);
    }
  }
  return {};
}

inline CheckOutcome suspension_laws(const WeightTriple& w) {
  const LElement c = LElement::canonical(w);
  for (const LElement& x : interiors(w)) {
    const ExtensionBundle e = ExtensionBundle::untwisted(x);
    for (int i = 0; i < kAxes; ++i) {
      const ExtensionBundle si = suspend(e, i);
      for (int j = 0; j < kAxes; ++j) {
        if (!iso_test_general(si, suspend(e, j))) {
          return "suspension depends on axis at " + e.to_string();
        }
        if (!iso_test_general(suspend(si, j), e.twisted(c))) {
          return "double suspension is not the c-twist at " + e.to_string();
        }
      }
    }
  }
  for (int i = 0; i < kAxes; ++i) {
    const LElement edge = (w[i] - 2) * LElement::generator(w, i);
    const ExtensionBundle lhs = suspend(ExtensionBundle::untwisted(edge), i);
    const ExtensionBundle rhs = ExtensionBundle::auslander(w, (w[i] - 1) * LElement::generator(w, i));
    if (lhs != rhs) return "boundary identity fails on axis " + std::to_string(i + 1);
  }
  if (w[0] == 2 && !suspension_is_x1_twist_check(w)) return "[1] is not the x1-twist";
  return {};
}

inline CheckOutcome tilting_checks(const WeightTriple& w) {
  if (w[0] != 2) return {};
  const Int p = w[1], q = w[2];
  Int dims[2] = {0, 0};
  for (TiltingKind kind : {TiltingKind::t1, TiltingKind::t2}) {
    const TiltingObject t = build_tilting(w, kind);
    const std::string tag = std::string(to_string(kind)) + ": ";
    if (static_cast<Int>(t.summands.size()) != (q - 1) * (p - 1)) return tag + "summand count";
    if (!summands_pairwise_non_isomorphic(t)) return tag + "isomorphic summands";
    const auto cert = check_extension_free(t);
    if (!cert.extension_free) return tag + "not extension-free";
    const Quiver quiver = build_quiver(t);
    if (!matches_picture(quiver, w)) return tag + "quiver differs from the grid picture";
    if (kind == TiltingKind::t1) {
      if (static_cast<Int>(quiver.count_arrows('x')) != (q - 2) * (p - 1) ||
          static_cast<Int>(quiver.count_arrows('y')) != (q - 1) * (p - 2) ||
          static_cast<Int>(quiver.count_relations(QuiverRelation::Kind::commutativity)) !=
              (q - 2) * (p - 2)) {
        return tag + "arrow or relation counts";
      }
    }
    dims[kind == TiltingKind::t1 ? 0 : 1] = end_dimension(t);
  }
  if (dims[0] != dims[1]) return "End-dimensions of t1 and t2 differ";
  return {};
}

}  // namespace checks

struct SelftestOptions {
  Int max_weight = 6;
  // Substitute interior action for the orbit suites (negative-path testing).
  SigmaMap sigma = standard_sigma();
  // Heavy exhaustive suites stop at this weight.
  Int iso_verify_max_weight = 6;
};

struct SuiteResult {
  std::string name;
  std::size_t triples_checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

struct SelftestReport {
  std::vector<SuiteResult> suites;
  bool ok() const {
    for (const auto& s : suites)
      if (!s.ok()) return false;
    return true;
  }
};

inline SelftestReport run_selftest(const SelftestOptions& opt) {
  if (opt.max_weight < 2) throw std::invalid_argument("max_weight must be >= 2");
  SelftestReport report;
  auto suite = [&](const std::string& name, auto&& check) {
    SuiteResult r{name, 0, {}};
    for (const WeightTriple& w : sorted_triples(opt.max_weight)) {
      CheckOutcome out;
      try {
        out = check(w);
      } catch (const std::exception& e) {
        out = std::string("exception: ") + e.what();
      }
      ++r.triples_checked;
      if (!out.empty()) r.failures.push_back(w.to_string() + ": " + out);
    }
    report.suites.push_back(std::move(r));
  };
  suite("orbit-agreement", [&](const WeightTriple& w) {
    return checks::orbit_agreement(w, opt.sigma, w[2] <= opt.iso_verify_max_weight);
  });
  suite("fixed-point-law", [&](const WeightTriple& w) { return checks::fixed_point_law(w, opt.sigma); });
  suite("iso-vs-k0", [&](const WeightTriple& w) {
    return w[2] <= opt.iso_verify_max_weight ? checks::iso_vs_k0(w) : CheckOutcome{};
  });
  suite("cover-hull", [&](const WeightTriple& w) {
    return w[2] <= opt.iso_verify_max_weight ? checks::cover_hull_classification(w) : CheckOutcome{};
  });
  suite("stability-trichotomy", [](const WeightTriple& w) { return checks::stability_trichotomy(w); });
  suite("tau-agreement", [&](const WeightTriple& w) { return checks::tau_agreement(w, opt.sigma); });
  suite("suspension", [](const WeightTriple& w) { return checks::suspension_laws(w); });
  suite("tilting", [](const WeightTriple& w) { return checks::tilting_checks(w); });
  return report;
}

}  // namespace wpl

#pragma once

// Command-line front-end. run() is the whole program minus main(), so tests
// can drive it with an argument vector and capture both streams.
//
// Exit codes: 0 success, 1 usage/parse/precondition error, 2 a verification
// found a disagreement between a formula and its oracle.

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "wpl/bundles.hpp"
#include "wpl/element_syntax.hpp"
#include "wpl/k0.hpp"
#include "wpl/orbits.hpp"
#include "wpl/quiver.hpp"
#include "wpl/quotient.hpp"
#include "wpl/report.hpp"
#include "wpl/selftest.hpp"
#include "wpl/stable.hpp"

namespace wpl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitViolation = 2;

namespace detail {

struct Emitter {
  std::ostream& out;
  bool as_json;

  // Table output: "key: value" lines in insertion order.
  void table(const std::vector<std::pair<std::string, std::string>>& rows) const {
    for (const auto& [k, v] : rows) out << k << ": " << v << "\n";
  }
  void json_doc(const json& j) const { out << j.dump(2) << "\n"; }
};

inline std::string join(const std::vector<LElement>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + to_string(xs[i]);
  return s;
}

inline int cmd_info(const Emitter& em, const WeightTriple& w) {
  const WeightClass k = classify(w);
  const Int dw = delta(omega(w));
  std::optional<Int> index;
  std::optional<Int> tau;
  if (k != WeightClass::tubular) {
    index = static_cast<Int>(OmegaQuotient(w).size());
    tau = tau_orbit_count_formula(w);
  }
  const Int pic = pic_orbit_count_formula(w);
  if (em.as_json) {
    em.json_doc({{"weights", weights_json(w)},
                 {"p", w.lcm()},
                 {"omega", to_string(omega(w))},
                 {"delta_omega", dw},
                 {"class", to_string(k)},
                 {"k0_rank", K0Basis(w).size()},
                 {"omega_index", index ? json(*index) : json(nullptr)},
                 {"interiors", w.interior_count()},
                 {"pic_orbits", pic},
                 {"transitive", is_transitive(w)},
                 {"tau_orbits", tau ? json(*tau) : json(nullptr)}});
  } else {
    em.table({{"weights", w.to_string()},
              {"p", std::to_string(w.lcm())},
              {"omega", to_string(omega(w))},
              {"delta(omega)", std::to_string(dw)},
              {"class", to_string(k)},
              {"K0 rank", std::to_string(K0Basis(w).size())},
              {"[L:Zw]", index ? std::to_string(*index) : "infinite (tubular)"},
              {"interiors", std::to_string(w.interior_count())},
              {"Pic orbits", std::to_string(pic)},
              {"transitive", is_transitive(w) ? "yes" : "no"},
              {"tau orbits", tau ? std::to_string(*tau) : "infinite (tubular)"}});
  }
  return kExitOk;
}

inline int cmd_normalize(const Emitter& em, const WeightTriple& w, const std::string& text) {
  const LElement x = parse_element(w, text);
  std::optional<Int> r;
  if (classify(w) != WeightClass::tubular) r = in_z_omega(x);
  if (em.as_json) {
    em.json_doc({{"element", to_string(x)},
                 {"normal_form", {x.coord(0), x.coord(1), x.coord(2), x.c_part()}},
                 {"delta", delta(x)},
                 {"nonneg", is_nonneg(x)},
                 {"omega_multiple", r ? json(*r) : json(nullptr)}});
  } else {
    em.table({{"element", to_string(x)},
              {"normal form", to_quadruple(x)},
              {"delta", std::to_string(delta(x))},
              {"nonneg", is_nonneg(x) ? "yes" : "no"},
              {"in Zw", r ? std::to_string(*r) + "w" : "no"}});
  }
  return kExitOk;
}

inline int cmd_k0(const Emitter& em, const WeightTriple& w, const std::string& text,
                  const std::optional<std::string>& interior) {
  const LElement x = parse_element(w, text);
  const K0Class k = interior ? extension_bundle_class(ExtensionBundle(x, parse_element(w, *interior)))
                             : line_bundle_class(x);
  if (em.as_json) {
    json j = k0_json(k);
    j["rank"] = rank(k);
    j["degree"] = degree(k);
    j["determinant"] = to_string(determinant(k));
    em.json_doc(j);
  } else {
    const K0Basis basis(w);
    std::string terms;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (k[i] == 0) continue;
      if (!terms.empty()) terms += " ";
      terms += (k[i] > 0 ? "+" : "") + std::to_string(k[i]) + "[" + basis.label(i) + "]";
    }
    em.table({{"class", terms.empty() ? "0" : terms},
              {"rank", std::to_string(rank(k))},
              {"degree", std::to_string(degree(k))},
              {"determinant", to_string(determinant(k))}});
  }
  return kExitOk;
}

inline int cmd_iso(const Emitter& em, const WeightTriple& w, const std::string& xs,
                   const std::string& ys, const std::string& zs) {
  const LElement x = parse_element(w, xs), y = parse_element(w, ys), z = parse_element(w, zs);
  const ExtensionBundle e = ExtensionBundle::untwisted(x);
  const ExtensionBundle f(z, y);
  const bool criterion = iso_test(x, y, z);
  const bool by_class = iso_test_by_classes(e, f);
  if (em.as_json) {
    em.json_doc({{"left", e.to_string()},
                 {"right", f.to_string()},
                 {"isomorphic", criterion},
                 {"k0_agrees", criterion == by_class}});
  } else {
    em.table({{"left", e.to_string()},
              {"right", f.to_string()},
              {"isomorphic", criterion ? "yes" : "no"},
              {"K0 check", criterion == by_class ? "agrees" : "DISAGREES"}});
  }
  return criterion == by_class ? kExitOk : kExitViolation;
}

inline int cmd_bundle(const Emitter& em, const WeightTriple& w, const std::string& interior,
                      const std::string& twist) {
  const ExtensionBundle e(parse_element(w, twist), parse_element(w, interior));
  if (em.as_json) {
    em.json_doc(bundle_json(e));
  } else {
    em.table({{"bundle", e.to_string()},
              {"auslander", is_auslander(e) ? "yes" : "no"},
              {"canonical rep", to_string(canonical_rep(e))},
              {"slope", slope(e).to_string()},
              {"stability", to_string(stability(e))},
              {"cover", join(projective_cover(e).items())},
              {"hull", join(injective_hull(e).items())}});
  }
  return kExitOk;
}

inline int cmd_orbits(const Emitter& em, const WeightTriple& w, bool list) {
  const Int formula = pic_orbit_count_formula(w);
  const Int burnside = pic_orbit_count_burnside(w);
  const OrbitPartition part = pic_orbit_partition(w);
  const bool agree = formula == burnside && formula == static_cast<Int>(part.count());
  if (em.as_json) {
    em.json_doc(pic_orbits_json(w, part, formula, burnside));
  } else {
    em.table({{"weights", w.to_string()},
              {"count", std::to_string(part.count())},
              {"formula", std::to_string(formula)},
              {"burnside", std::to_string(burnside)},
              {"brute", std::to_string(part.count())},
              {"transitive", part.count() == 1 ? "yes" : "no"}});
    if (list) {
      for (std::size_t b = 0; b < part.blocks.size(); ++b) {
        std::vector<LElement> members;
        for (std::size_t k : part.blocks[b]) members.push_back(part.elements[k]);
        em.out << "block " << b << ": " << join(members) << "\n";
      }
    }
  }
  return agree ? kExitOk : kExitViolation;
}

inline int cmd_tau_orbits(const Emitter& em, const WeightTriple& w, bool list) {
  const Int formula = tau_orbit_count_formula(w);
  const TauOrbitData d = tau_orbit_partition(w);
  const auto burnside = static_cast<Int>(d.cosets * d.interior_count / 4);
  const bool agree = formula == static_cast<Int>(d.count) && formula == burnside && d.free &&
                     d.klein_relations;
  if (em.as_json) {
    em.json_doc(tau_orbits_json(w, d, formula));
  } else {
    em.table({{"weights", w.to_string()},
              {"count", std::to_string(d.count)},
              {"formula", std::to_string(formula)},
              {"burnside", std::to_string(burnside)},
              {"brute", std::to_string(d.count)},
              {"[L:Zw]", std::to_string(d.cosets)},
              {"free action", d.free ? "yes" : "no"}});
    if (list) {
      for (std::size_t b = 0; b < d.blocks.size(); ++b) {
        em.out << "block " << b << ":";
        for (const auto& [c, k] : d.blocks[b]) {
          em.out << " [" << to_string(d.coset_reps[c]) << " | " << to_string(d.interiors[k]) << "]";
        }
        em.out << "\n";
      }
    }
  }
  return agree ? kExitOk : kExitViolation;
}

inline int cmd_tilting(const Emitter& em, const WeightTriple& w, const std::string& kind_text,
                       const std::string& dot_path) {
  const TiltingKind kind = parse_tilting_kind(kind_text);
  const TiltingObject t = build_tilting(w, kind);
  std::vector<LElement> shifts;
  for (const auto& s : t.summands) shifts.push_back(kind == TiltingKind::cub ? s.interior() : s.twist());

  if (kind == TiltingKind::cub) {
    if (!dot_path.empty()) throw precondition_error("--dot needs kind t1 or t2");
    if (em.as_json) {
      em.json_doc({{"kind", "cub"},
                   {"weights", weights_json(w)},
                   {"summands", elements_json(shifts)},
                   {"extension_free", nullptr},
                   {"note", "extension-freeness of cub is not checked: requires general Hom formula"}});
    } else {
      em.table({{"kind", "cub"},
                {"summands", std::to_string(t.summands.size())},
                {"interiors", join(shifts)},
                {"extension_free", "unsupported (requires general Hom formula)"}});
    }
    return kExitOk;
  }

  const auto cert = check_extension_free(t);
  if (!cert.extension_free) {
    if (em.as_json) {
      json v = json::array();
      for (const auto& bad : cert.violations) {
        v.push_back({{"source", to_string(shifts[bad.source])},
                     {"target", to_string(shifts[bad.target])},
                     {"degree", bad.degree}});
      }
      em.json_doc({{"kind", to_string(kind)}, {"extension_free", false}, {"violations", v}});
    } else {
      em.table({{"kind", to_string(kind)},
                {"extension_free", "no"},
                {"violations", std::to_string(cert.violations.size())}});
    }
    return kExitViolation;
  }
  const Quiver q = build_quiver(t);
  const Int dim = end_dimension(t);
  if (!dot_path.empty()) {
    std::ofstream f(dot_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + dot_path);
    f << to_dot(q, w);
  }
  if (em.as_json) {
    json j = quiver_json(q, dim, true);
    j["weights"] = weights_json(w);
    j["matches_picture"] = matches_picture(q, w);
    em.json_doc(j);
  } else {
    em.table({{"kind", to_string(kind)},
              {"summands", std::to_string(t.summands.size())},
              {"extension_free", "yes"},
              {"x arrows", std::to_string(q.count_arrows('x'))},
              {"y arrows", std::to_string(q.count_arrows('y'))},
              {"commutativity relations",
               std::to_string(q.count_relations(QuiverRelation::Kind::commutativity))},
              {"zero relations", std::to_string(q.count_relations(QuiverRelation::Kind::zero_square))},
              {"end_dim", std::to_string(dim)},
              {"matches picture", matches_picture(q, w) ? "yes" : "no"}});
  }
  return matches_picture(q, w) ? kExitOk : kExitViolation;
}

inline int cmd_selftest(const Emitter& em, Int max_weight, bool corrupt_sigma) {
  SelftestOptions opt;
  opt.max_weight = max_weight;
  if (corrupt_sigma) {
    // Drops sigma_1 to the identity, which breaks the Klein orbit structure.
    opt.sigma = [](const LElement& x, int j) { return j == 0 ? x : klein_sigma(x, j); };
  }
  const SelftestReport report = run_selftest(opt);
  if (em.as_json) {
    json suites = json::array();
    for (const auto& s : report.suites) {
      suites.push_back({{"name", s.name},
                        {"ok", s.ok()},
                        {"triples", s.triples_checked},
                        {"failures", s.failures}});
    }
    em.json_doc({{"max_weight", max_weight}, {"ok", report.ok()}, {"suites", suites}});
  } else {
    for (const auto& s : report.suites) {
      em.out << (s.ok() ? "PASS " : "FAIL ") << s.name << " (" << s.triples_checked
             << " triples)\n";
      for (const auto& f : s.failures) em.out << "  " << f << "\n";
    }
    em.out << (report.ok() ? "all suites passed" : "selftest FAILED") << "\n";
  }
  return report.ok() ? kExitOk : kExitViolation;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extension bundles over weighted projective lines of weight type (p1,p2,p3)", "wpl"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "table";
  bool json_flag = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));
  app.add_flag("--json", json_flag, "Shorthand for --format json");

  std::string weights, a, b, c, twist = "0", kind, dot;
  std::optional<std::string> interior;
  bool list = false, corrupt = false;
  Int max_weight = 6;

  auto* info = app.add_subcommand("info", "Group, class and count summary for a weight type");
  info->add_option("weights", weights, "p1,p2,p3")->required();

  auto* norm = app.add_subcommand("normalize", "Normal form of an element of L");
  norm->add_option("weights", weights)->required();
  norm->add_option("element", a, "e.g. 2x2+4x3-c or (l1,l2,l3,l)")->required();

  auto* k0 = app.add_subcommand("k0", "Grothendieck class of O(x), or of E<y>(x) with --interior");
  k0->add_option("weights", weights)->required();
  k0->add_option("element", a)->required();
  k0->add_option("--interior", interior, "Interior parameter y of an extension bundle");

  auto* iso = app.add_subcommand("iso", "Is E<x> isomorphic to E<y>(z)?");
  iso->add_option("weights", weights)->required();
  iso->add_option("x", a)->required();
  iso->add_option("y", b)->required();
  iso->add_option("z", c)->required();

  auto* bundle = app.add_subcommand("bundle", "Report on the extension bundle E<x>(twist)");
  bundle->add_option("weights", weights)->required();
  bundle->add_option("interior", a)->required();
  bundle->add_option("--twist", twist, "Line-bundle twist");

  auto* orbits = app.add_subcommand("orbits", "Picard-orbits of extension bundles");
  orbits->add_option("weights", weights)->required();
  orbits->add_flag("--list", list, "List the orbit blocks");

  auto* tau = app.add_subcommand("tau-orbits", "tau-orbits of extension bundles (non-tubular)");
  tau->add_option("weights", weights)->required();
  tau->add_flag("--list", list, "List the orbit blocks");

  auto* tilt = app.add_subcommand("tilting", "Tilting objects cub, t1, t2 and their quivers");
  tilt->add_option("weights", weights)->required();
  tilt->add_option("--kind", kind, "cub, t1 or t2")->required()->check(CLI::IsMember({"cub", "t1", "t2"}));
  tilt->add_option("--dot", dot, "Write the quiver as Graphviz DOT to this path");

  auto* self = app.add_subcommand("selftest", "Run every formula-versus-oracle sweep");
  self->add_option("--max-weight", max_weight, "Largest weight to sweep")->check(CLI::Range(2, 12));
  self->add_flag("--corrupt-sigma", corrupt, "Break the Klein action (negative-path check)")
      ->group("");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const detail::Emitter em{out, json_flag || format == "json"};
  try {
    if (*self) return detail::cmd_selftest(em, max_weight, corrupt);
    const WeightTriple w = parse_weights(weights);
    if (*info) return detail::cmd_info(em, w);
    if (*norm) return detail::cmd_normalize(em, w, a);
    if (*k0) return detail::cmd_k0(em, w, a, interior);
    if (*iso) return detail::cmd_iso(em, w, a, b, c);
    if (*bundle) return detail::cmd_bundle(em, w, a, twist);
    if (*orbits) return detail::cmd_orbits(em, w, list);
    if (*tau) return detail::cmd_tau_orbits(em, w, list);
    if (*tilt) return detail::cmd_tilting(em, w, kind, dot);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace wpl::cli

#pragma once

// Extension bundles as data: isomorphism, Auslander detection, orbit
// representatives, projective covers / injective hulls, slope and stability.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include "wpl/extension_bundle.hpp"
#include "wpl/k0.hpp"
#include "wpl/lgroup.hpp"

namespace wpl {

// E<x> ~ E<y>(z) for interiors x, y: either y = x and z = 0, or
// y = sigma_j(x) and z = sum_{i != j} (l_i + 1) x_i - c for some j.
inline bool iso_test(const LElement& x, const LElement& y, const LElement& z) {
  if (y == x && z.is_zero()) return true;
  // Case (ii) twists always have c-part -1.
  if (z.c_part() != -1) return false;
  for (int j = 0; j < kAxes; ++j) {
    if (z.coord(j) != 0) continue;
    if (klein_sigma(x, j) == y && klein_twist(x, j) == z) return true;
  }
  return false;
}

inline bool iso_test_by_classes(const ExtensionBundle& e, const ExtensionBundle& f) {
  return extension_bundle_class(e) == extension_bundle_class(f);
}

// E<x>(s) ~ E<y>(t)  iff  E<x> ~ E<y>(t - s).
inline bool iso_test_general(const ExtensionBundle& e, const ExtensionBundle& f) {
  if (e.weights() != f.weights()) throw weight_mismatch();
  const bool iso = iso_test(e.interior(), f.interior(), f.twist() - e.twist());
#if WPL_CROSSCHECK
  if (iso != iso_test_by_classes(e, f)) {
    std::fprintf(stderr, "iso_test_general mismatch: %s vs %s\n", e.to_string().c_str(),
                 f.to_string().c_str());
    std::abort();
  }
#endif
  return iso;
}

inline bool is_auslander(const ExtensionBundle& e) {
  const LElement& x = e.interior();
  if (x.is_zero()) return true;
  const LElement zero = LElement::zero(e.weights());
  for (int j = 0; j < kAxes; ++j) {
    if (klein_sigma(zero, j) == x) return true;
  }
  return false;
}

// Lexicographically smallest (l1,l2,l3) in {x, sigma_1 x, sigma_2 x, sigma_3 x}.
inline LElement canonical_rep(const LElement& interior) {
  LElement best = interior;
  for (int j = 0; j < kAxes; ++j) {
    const LElement s = klein_sigma(interior, j);
    if (s.coords() < best.coords()) best = s;
  }
  return best;
}
inline LElement canonical_rep(const ExtensionBundle& e) { return canonical_rep(e.interior()); }

// Multiset of line-bundle summands, identified by their determinants.
class BundleSummandList {
 public:
  BundleSummandList() = default;
  explicit BundleSummandList(std::vector<LElement> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
  }
  const std::vector<LElement>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }

  BundleSummandList shifted(const LElement& t) const {
    std::vector<LElement> out;
    for (const auto& x : items_) out.push_back(x + t);
    return BundleSummandList(std::move(out));
  }

  friend bool operator==(const BundleSummandList&, const BundleSummandList&) = default;
  friend auto operator<=>(const BundleSummandList&, const BundleSummandList&) = default;

 private:
  std::vector<LElement> items_;
};

// {t + omega} + {t + x - (l_i + 1) x_i : i}
inline BundleSummandList projective_cover(const ExtensionBundle& e) {
  const WeightTriple& w = e.weights();
  const LElement& t = e.twist();
  const LElement& x = e.interior();
  std::vector<LElement> out{t + omega(w)};
  for (int i = 0; i < kAxes; ++i) {
    out.push_back(t + x - (x.coord(i) + 1) * LElement::generator(w, i));
  }
  return BundleSummandList(std::move(out));
}

// {t + x} + {t + omega + (l_i + 1) x_i : i}
inline BundleSummandList injective_hull(const ExtensionBundle& e) {
  const WeightTriple& w = e.weights();
  const LElement& t = e.twist();
  const LElement& x = e.interior();
  std::vector<LElement> out{t + x};
  for (int i = 0; i < kAxes; ++i) {
    out.push_back(t + omega(w) + (x.coord(i) + 1) * LElement::generator(w, i));
  }
  return BundleSummandList(std::move(out));
}

// Exact rational in lowest terms, positive denominator.
class Rational {
 public:
  Rational(Int num = 0, Int den = 1) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const Int g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }
  Int num() const { return num_; }
  Int den() const { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  // Always "p/q", also for integers.
  std::string to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

 private:
  Int num_;
  Int den_;
};

inline Rational slope(const ExtensionBundle& e) {
  const LElement& t = e.twist();
  return Rational(delta(t + omega(e.weights())) + delta(t + e.interior()), 2);
}

enum class Stability { stable, semistable_not_stable, not_semistable };

inline const char* to_string(Stability s) {
  switch (s) {
    case Stability::stable: return "stable";
    case Stability::semistable_not_stable: return "semistable_not_stable";
    case Stability::not_semistable: return "not_semistable";
  }
  return "?";
}

// Semistable iff delta(omega) <= delta(x) <= delta(omega + 2(l_i+1) x_i) for
// every i; stable iff all of these are strict. Independent of the twist.
inline Stability stability(const LElement& interior) {
  const WeightTriple& w = interior.weights();
  const Int dw = delta(omega(w));
  const Int dx = delta(interior);
  bool semistable = dw <= dx;
  bool stable = dw < dx;
  for (int i = 0; i < kAxes; ++i) {
    const Int upper = delta(omega(w) + (2 * (interior.coord(i) + 1)) * LElement::generator(w, i));
    semistable = semistable && dx <= upper;
    stable = stable && dx < upper;
  }
  if (stable) return Stability::stable;
  return semistable ? Stability::semistable_not_stable : Stability::not_semistable;
}
inline Stability stability(const ExtensionBundle& e) { return stability(e.interior()); }

}  // namespace wpl

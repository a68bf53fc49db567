#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "wpl/element_syntax.hpp"
#include "wpl/lgroup.hpp"

namespace wpl {

// 0 <= x <= sum (p_i - 2) x_i, i.e. c-part zero and l_i <= p_i - 2.
inline bool is_interior(const LElement& x) {
  if (x.c_part() != 0) return false;
  for (int i = 0; i < kAxes; ++i) {
    if (x.coord(i) > x.weights()[i] - 2) return false;
  }
  return true;
}

// All interior parameters in lexicographic (l1,l2,l3) order.
inline std::vector<LElement> interiors(const WeightTriple& w) {
  std::vector<LElement> out;
  out.reserve(static_cast<std::size_t>(w.interior_count()));
  for (Int a = 0; a <= w[0] - 2; ++a)
    for (Int b = 0; b <= w[1] - 2; ++b)
      for (Int c = 0; c <= w[2] - 2; ++c) out.push_back(LElement::normalize(w, a, b, c, 0));
  return out;
}

// Position of an interior in interiors(w).
inline std::size_t interior_index(const LElement& x) {
  const WeightTriple& w = x.weights();
  return static_cast<std::size_t>((x.coord(0) * (w[1] - 1) + x.coord(1)) * (w[2] - 1) + x.coord(2));
}

// sigma_j keeps l_j and sends l_i to p_i - 2 - l_i for i != j.
inline LElement klein_sigma(const LElement& x, int j) {
  const WeightTriple& w = x.weights();
  std::array<Int, 3> l = x.coords();
  for (int i = 0; i < kAxes; ++i) {
    if (i != j) l[i] = w[i] - 2 - l[i];
  }
  return LElement::normalize(w, l[0], l[1], l[2], 0);
}

// The twist z_j = sum_{i != j} (l_i + 1) x_i - c with E<x> ~ E<sigma_j x>(z_j).
inline LElement klein_twist(const LElement& x, int j) {
  const WeightTriple& w = x.weights();
  std::array<Int, 3> l{0, 0, 0};
  for (int i = 0; i < kAxes; ++i) {
    if (i != j) l[i] = x.coord(i) + 1;
  }
  return LElement::normalize(w, l[0], l[1], l[2], -1);
}

// E_L<x> with L = O(twist). Record equality is not isomorphism; see iso_test_general.
class ExtensionBundle {
 public:
  ExtensionBundle(LElement twist, LElement interior)
      : twist_(std::move(twist)), interior_(std::move(interior)) {
    if (twist_.weights() != interior_.weights()) throw weight_mismatch();
    if (!is_interior(interior_)) {
      throw std::invalid_argument("not an interior parameter: " + wpl::to_string(interior_));
    }
  }

  static ExtensionBundle auslander(const WeightTriple& w, const LElement& twist) {
    return ExtensionBundle(twist, LElement::zero(w));
  }
  static ExtensionBundle untwisted(const LElement& interior) {
    return ExtensionBundle(LElement::zero(interior.weights()), interior);
  }

  const WeightTriple& weights() const { return twist_.weights(); }
  const LElement& twist() const { return twist_; }
  const LElement& interior() const { return interior_; }

  // E(t)
  ExtensionBundle twisted(const LElement& t) const { return ExtensionBundle(twist_ + t, interior_); }

  std::string to_string() const {
    return "E<" + wpl::to_string(interior_) + ">(" + wpl::to_string(twist_) + ")";
  }

  friend bool operator==(const ExtensionBundle&, const ExtensionBundle&) = default;

 private:
  LElement twist_;
  LElement interior_;
};

}  // namespace wpl

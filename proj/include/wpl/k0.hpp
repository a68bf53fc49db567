#pragma once

// Grothendieck group K0 in the basis {[O(x)] : 0 <= x <= c}, ordered as
//   [O], [O(x1)] .. [O((p1-1)x1)], [O(x2)] .., [O(x3)] .., [O(c)].

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "wpl/extension_bundle.hpp"
#include "wpl/lgroup.hpp"

#ifndef WPL_CROSSCHECK
#ifdef NDEBUG
#define WPL_CROSSCHECK 0
#else
#define WPL_CROSSCHECK 1
#endif
#endif

namespace wpl {

class K0Basis {
 public:
  explicit K0Basis(const WeightTriple& w) : w_(w) {}

  std::size_t size() const { return static_cast<std::size_t>(w_[0] + w_[1] + w_[2] - 1); }

  std::size_t index_of_structure_sheaf() const { return 0; }
  std::size_t index_of_canonical() const { return size() - 1; }
  // [O(l x_i)], 1 <= l <= p_i - 1.
  std::size_t index_of(int axis, Int l) const {
    std::size_t off = 1;
    for (int i = 0; i < axis; ++i) off += static_cast<std::size_t>(w_[i] - 1);
    return off + static_cast<std::size_t>(l - 1);
  }

  // The element x with basis vector [O(x)].
  LElement element(std::size_t k) const {
    if (k == 0) return LElement::zero(w_);
    if (k == index_of_canonical()) return LElement::canonical(w_);
    std::size_t off = 1;
    for (int i = 0; i < kAxes; ++i) {
      const auto len = static_cast<std::size_t>(w_[i] - 1);
      if (k < off + len) {
        return static_cast<Int>(k - off + 1) * LElement::generator(w_, i);
      }
      off += len;
    }
    throw std::out_of_range("K0 basis index");
  }

  std::string label(std::size_t k) const {
    const LElement x = element(k);
    return x.is_zero() ? "O" : "O(" + to_string(x) + ")";
  }

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    for (std::size_t k = 0; k < size(); ++k) out.push_back(label(k));
    return out;
  }

 private:
  WeightTriple w_;
};

class K0Class {
 public:
  explicit K0Class(const WeightTriple& w) : w_(w), coeffs_(K0Basis(w).size(), 0) {}
  K0Class(const WeightTriple& w, std::vector<Int> coeffs) : w_(w), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != K0Basis(w).size()) throw std::invalid_argument("K0 coefficient length");
  }

  // Basis vector [O(x)] for 0 <= x <= c, by basis index.
  static K0Class basis_vector(const WeightTriple& w, std::size_t k) {
    K0Class out(w);
    out.coeffs_.at(k) = 1;
    return out;
  }

  const WeightTriple& weights() const { return w_; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  Int operator[](std::size_t k) const { return coeffs_.at(k); }
  Int& operator[](std::size_t k) { return coeffs_.at(k); }

  K0Class& operator+=(const K0Class& o) {
    if (w_ != o.w_) throw weight_mismatch();
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  K0Class& operator-=(const K0Class& o) {
    if (w_ != o.w_) throw weight_mismatch();
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
  }
  friend K0Class operator+(K0Class a, const K0Class& b) { return a += b; }
  friend K0Class operator-(K0Class a, const K0Class& b) { return a -= b; }
  friend K0Class operator*(Int n, K0Class a) {
    for (Int& v : a.coeffs_) v *= n;
    return a;
  }

  friend bool operator==(const K0Class&, const K0Class&) = default;

 private:
  WeightTriple w_;
  std::vector<Int> coeffs_;
};

// [O(x)] = sum_i [O(l_i x_i)] + l[O(c)] - (l+2)[O]; a term with l_i = 0 is [O].
inline K0Class line_bundle_class(const LElement& x) {
  const WeightTriple& w = x.weights();
  const K0Basis basis(w);
  K0Class out(w);
  for (int i = 0; i < kAxes; ++i) {
    const Int li = x.coord(i);
    out[li == 0 ? basis.index_of_structure_sheaf() : basis.index_of(i, li)] += 1;
  }
  out[basis.index_of_canonical()] += x.c_part();
  out[basis.index_of_structure_sheaf()] -= x.c_part() + 2;
  return out;
}

inline Int rank(const K0Class& k) {
  Int r = 0;
  for (Int v : k.coeffs()) r += v;
  return r;
}

inline Int degree(const K0Class& k) {
  const K0Basis basis(k.weights());
  Int d = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) d += k[i] * delta(basis.element(i));
  return d;
}

inline LElement determinant(const K0Class& k) {
  const K0Basis basis(k.weights());
  LElement d = LElement::zero(k.weights());
  for (std::size_t i = 0; i < basis.size(); ++i) d += k[i] * basis.element(i);
  return d;
}

// [E_L<x>] = [L(omega)] + [L(x)] from the defining extension.
inline K0Class extension_bundle_class(const ExtensionBundle& e) {
  const LElement w = omega(e.weights());
  return line_bundle_class(e.twist() + w) + line_bundle_class(e.twist() + e.interior());
}

inline bool pair_sum_equal_by_classes(const LElement& x, const LElement& y, const LElement& z,
                                      const LElement& u) {
  return line_bundle_class(x) + line_bundle_class(y) == line_bundle_class(z) + line_bundle_class(u);
}

// [O(x)] + [O(y)] == [O(z)] + [O(u)] iff the c-parts add up equally and the
// coordinate pairs agree as multisets on every axis.
inline bool pair_sum_equal(const LElement& x, const LElement& y, const LElement& z,
                           const LElement& u) {
  bool eq = x.c_part() + y.c_part() == z.c_part() + u.c_part();
  for (int i = 0; i < kAxes && eq; ++i) {
    const Int a = x.coord(i), b = y.coord(i), c = z.coord(i), d = u.coord(i);
    eq = (a == c && b == d) || (a == d && b == c);
  }
#if WPL_CROSSCHECK
  if (eq != pair_sum_equal_by_classes(x, y, z, u)) {
    std::fprintf(stderr, "pair_sum_equal mismatch for %s, %s, %s, %s\n", to_string(x).c_str(),
                 to_string(y).c_str(), to_string(z).c_str(), to_string(u).c_str());
    std::abort();
  }
#endif
  return eq;
}

}  // namespace wpl

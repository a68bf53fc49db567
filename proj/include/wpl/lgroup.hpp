#pragma once

// The rank-one abelian group L(p1,p2,p3) on x1,x2,x3 with p1*x1 = p2*x2 =
// p3*x3 = c. Elements are stored in normal form l1*x1 + l2*x2 + l3*x3 + l*c
// with 0 <= l_i <= p_i - 1, so equality is coordinate equality.
//
// Axis indices are 0-based throughout the library: axis 0 is x1, axis 1 is x2,
// axis 2 is x3.

#include <array>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace wpl {

using Int = std::int64_t;

inline constexpr int kAxes = 3;

class weight_mismatch : public std::invalid_argument {
 public:
  weight_mismatch() : std::invalid_argument("weight mismatch between operands") {}
};

class tubular_weight_error : public std::domain_error {
 public:
  explicit tubular_weight_error(const std::string& what)
      : std::domain_error("tubular weight type: " + what) {}
};

class precondition_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Floor division and the matching non-negative remainder.
constexpr Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
constexpr Int floor_mod(Int a, Int b) { return a - floor_div(a, b) * b; }

class WeightTriple {
 public:
  WeightTriple(Int p1, Int p2, Int p3) : p_{p1, p2, p3} {
    for (Int w : p_) {
      if (w < 2) throw std::invalid_argument("weights must be >= 2");
    }
  }

  Int operator[](int axis) const { return p_.at(static_cast<std::size_t>(axis)); }
  const std::array<Int, 3>& weights() const { return p_; }

  // lcm(p1,p2,p3)
  Int lcm() const { return std::lcm(std::lcm(p_[0], p_[1]), p_[2]); }
  Int product() const { return p_[0] * p_[1] * p_[2]; }

  // Number of interior parameters, prod(p_i - 1).
  Int interior_count() const { return (p_[0] - 1) * (p_[1] - 1) * (p_[2] - 1); }

  std::string to_string() const {
    return "(" + std::to_string(p_[0]) + "," + std::to_string(p_[1]) + "," +
           std::to_string(p_[2]) + ")";
  }

  friend bool operator==(const WeightTriple&, const WeightTriple&) = default;
  friend auto operator<=>(const WeightTriple&, const WeightTriple&) = default;

 private:
  std::array<Int, 3> p_;
};

class LElement {
 public:
  // Unique normal form of a1*x1 + a2*x2 + a3*x3 + a*c.
  static LElement normalize(const WeightTriple& w, Int a1, Int a2, Int a3, Int a) {
    const std::array<Int, 3> raw{a1, a2, a3};
    LElement e(w);
    e.c_ = a;
    for (int i = 0; i < kAxes; ++i) {
      e.coord_[i] = floor_mod(raw[i], w[i]);
      e.c_ += floor_div(raw[i], w[i]);
    }
    return e;
  }

  static LElement zero(const WeightTriple& w) { return LElement(w); }
  static LElement generator(const WeightTriple& w, int axis) {
    std::array<Int, 3> raw{0, 0, 0};
    raw.at(static_cast<std::size_t>(axis)) = 1;
    return normalize(w, raw[0], raw[1], raw[2], 0);
  }
  static LElement canonical(const WeightTriple& w) { return normalize(w, 0, 0, 0, 1); }

  const WeightTriple& weights() const { return w_; }
  Int coord(int axis) const { return coord_.at(static_cast<std::size_t>(axis)); }
  const std::array<Int, 3>& coords() const { return coord_; }
  // Coefficient of c in the normal form.
  Int c_part() const { return c_; }

  bool is_zero() const { return c_ == 0 && coord_ == std::array<Int, 3>{0, 0, 0}; }

  LElement operator+(const LElement& o) const {
    check_same(o);
    return normalize(w_, coord_[0] + o.coord_[0], coord_[1] + o.coord_[1],
                     coord_[2] + o.coord_[2], c_ + o.c_);
  }
  LElement operator-() const { return normalize(w_, -coord_[0], -coord_[1], -coord_[2], -c_); }
  LElement operator-(const LElement& o) const { return *this + (-o); }
  LElement& operator+=(const LElement& o) { return *this = *this + o; }
  LElement& operator-=(const LElement& o) { return *this = *this - o; }
  friend LElement operator*(Int n, const LElement& a) {
    return normalize(a.w_, n * a.coord_[0], n * a.coord_[1], n * a.coord_[2], n * a.c_);
  }

  friend bool operator==(const LElement&, const LElement&) = default;
  friend auto operator<=>(const LElement&, const LElement&) = default;

 private:
  explicit LElement(const WeightTriple& w) : w_(w) {}

  void check_same(const LElement& o) const {
    if (w_ != o.w_) throw weight_mismatch();
  }

  WeightTriple w_;
  std::array<Int, 3> coord_{0, 0, 0};
  Int c_ = 0;
};

inline LElement add(const LElement& a, const LElement& b) { return a + b; }
inline LElement neg(const LElement& a) { return -a; }
inline LElement scale(Int n, const LElement& a) { return n * a; }

// omega = c - x1 - x2 - x3, the dualizing element.
inline LElement omega(const WeightTriple& w) { return LElement::normalize(w, -1, -1, -1, 1); }

// xbar_j = omega + x_j (axis is 0-based).
inline LElement xbar(const WeightTriple& w, int axis) {
  if (axis < 0 || axis >= kAxes) throw std::out_of_range("axis must be 0, 1 or 2");
  return omega(w) + LElement::generator(w, axis);
}

// Degree homomorphism L -> Z with delta(x_i) = p / p_i.
inline Int delta(const LElement& a) {
  const WeightTriple& w = a.weights();
  const Int p = w.lcm();
  Int d = a.c_part() * p;
  for (int i = 0; i < kAxes; ++i) d += a.coord(i) * (p / w[i]);
  return d;
}

inline bool is_nonneg(const LElement& a) { return a.c_part() >= 0; }
inline bool leq(const LElement& a, const LElement& b) { return is_nonneg(b - a); }

enum class WeightClass { domestic, tubular, wild };

inline WeightClass classify(const WeightTriple& w) {
  const Int d = delta(omega(w));
  if (d < 0) return WeightClass::domestic;
  if (d == 0) return WeightClass::tubular;
  return WeightClass::wild;
}

inline const char* to_string(WeightClass k) {
  switch (k) {
    case WeightClass::domestic: return "domestic";
    case WeightClass::tubular: return "tubular";
    case WeightClass::wild: return "wild";
  }
  return "?";
}

inline void require_non_tubular(const WeightTriple& w, const char* op) {
  if (delta(omega(w)) == 0) throw tubular_weight_error(std::string(op) + " needs delta(omega) != 0");
}

// r with a = r*omega, if any. delta(omega) != 0 pins down the only candidate.
inline std::optional<Int> in_z_omega(const LElement& a) {
  const WeightTriple& w = a.weights();
  require_non_tubular(w, "in_z_omega");
  const Int dw = delta(omega(w));
  const Int da = delta(a);
  if (da % dw != 0) return std::nullopt;
  const Int r = da / dw;
  if (r * omega(w) != a) return std::nullopt;
  return r;
}

}  // namespace wpl

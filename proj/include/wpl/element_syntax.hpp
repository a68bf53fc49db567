#pragma once

// Text syntax for elements of L:
//   signed integer combinations of x1 x2 x3 c w (w is omega), e.g. "2x2+4x3-c",
//   "3*w - x1", or the quadruple form "(l1,l2,l3,l)".
// Whitespace is ignored and '*' between coefficient and token is optional.
// Formatting always emits the normal form, e.g. "x1+2x2+6x3-2c", or "0".

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wpl/lgroup.hpp"

namespace wpl {

class parse_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

class ElementParser {
 public:
  ElementParser(const WeightTriple& w, std::string_view text) : w_(w) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
    }
  }

  LElement parse() {
    if (s_.empty()) fail("empty element");
    if (s_.front() == '(') return parse_quadruple();
    LElement acc = LElement::zero(w_);
    bool first = true;
    while (pos_ < s_.size()) {
      Int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = (s_[pos_] == '-') ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      acc += parse_term(sign);
      first = false;
    }
    return acc;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw parse_error("cannot parse element '" + s_ + "' at offset " + std::to_string(pos_) +
                      ": " + why);
  }

  bool read_int(Int& out) {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) return false;
    if (pos_ - start > 15) fail("coefficient too large");
    out = std::stoll(s_.substr(start, pos_ - start));
    return true;
  }

  LElement parse_term(Int sign) {
    Int coeff = 1;
    const bool has_coeff = read_int(coeff);
    if (has_coeff && peek() == '*') ++pos_;
    const char ch = peek();
    if (ch == 'x') {
      ++pos_;
      const char d = peek();
      if (d < '1' || d > '3') fail("expected x1, x2 or x3");
      ++pos_;
      return (sign * coeff) * LElement::generator(w_, d - '1');
    }
    if (ch == 'c') {
      ++pos_;
      return (sign * coeff) * LElement::canonical(w_);
    }
    if (ch == 'w') {
      ++pos_;
      return (sign * coeff) * omega(w_);
    }
    if (has_coeff && coeff == 0) return LElement::zero(w_);
    fail("expected one of x1 x2 x3 c w");
  }

  LElement parse_quadruple() {
    ++pos_;
    std::array<Int, 4> v{};
    for (int k = 0; k < 4; ++k) {
      Int sign = 1;
      if (peek() == '-') {
        sign = -1;
        ++pos_;
      } else if (peek() == '+') {
        ++pos_;
      }
      if (!read_int(v[k])) fail("expected integer in quadruple");
      v[k] *= sign;
      const char expect = (k == 3) ? ')' : ',';
      if (peek() != expect) fail(std::string("expected '") + expect + "'");
      ++pos_;
    }
    if (pos_ != s_.size()) fail("trailing characters after quadruple");
    return LElement::normalize(w_, v[0], v[1], v[2], v[3]);
  }

  const WeightTriple& w_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline LElement parse_element(const WeightTriple& w, std::string_view text) {
  return detail::ElementParser(w, text).parse();
}

inline std::string to_string(const LElement& a) {
  std::string out;
  auto emit = [&out](Int coeff, const std::string& token) {
    if (coeff == 0) return;
    if (coeff < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    const Int mag = coeff < 0 ? -coeff : coeff;
    if (mag != 1) out += std::to_string(mag);
    out += token;
  };
  emit(a.coord(0), "x1");
  emit(a.coord(1), "x2");
  emit(a.coord(2), "x3");
  emit(a.c_part(), "c");
  return out.empty() ? "0" : out;
}

inline std::string to_quadruple(const LElement& a) {
  std::ostringstream os;
  os << "(" << a.coord(0) << "," << a.coord(1) << "," << a.coord(2) << "," << a.c_part() << ")";
  return os.str();
}

// "p1,p2,p3"
inline WeightTriple parse_weights(std::string_view text) {
  std::vector<Int> parts;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw parse_error("weights must look like p1,p2,p3");
    for (char ch : cur) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw parse_error("weights must be positive integers: '" + std::string(text) + "'");
    }
    if (cur.size() > 9) throw parse_error("weight too large");
    parts.push_back(std::stoll(cur));
    cur.clear();
  };
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == ',') {
      flush();
    } else {
      cur.push_back(ch);
    }
  }
  flush();
  if (parts.size() != 3) throw parse_error("expected exactly three weights");
  try {
    return WeightTriple(parts[0], parts[1], parts[2]);
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what());
  }
}

}  // namespace wpl

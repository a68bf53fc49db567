#pragma once

// Integer Smith normal form, used to read off the order of a finitely
// presented abelian group Z^n / (row span of the relation matrix).

#include <cstdlib>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wpl/lgroup.hpp"

namespace wpl {

using IntMatrix = std::vector<std::vector<Int>>;

class infinite_quotient_error : public std::domain_error {
 public:
  infinite_quotient_error() : std::domain_error("infinite quotient: relation matrix is singular") {}
};

namespace detail {

inline void check_rectangular(const IntMatrix& m) {
  for (const auto& row : m) {
    if (row.size() != m.front().size()) throw std::invalid_argument("ragged relation matrix");
  }
}

}  // namespace detail

// Diagonal d_1 | d_2 | ... | d_r of the Smith normal form (non-negative,
// length min(rows, cols); trailing zeros mark free rank).
inline std::vector<Int> smith_invariants(IntMatrix m) {
  if (m.empty()) return {};
  detail::check_rectangular(m);
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  const std::size_t diag = std::min(rows, cols);

  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (auto& row : m) std::swap(row[a], row[b]);
  };

  for (std::size_t t = 0; t < diag; ++t) {
    while (true) {
      // Smallest non-zero entry of the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (m[i][j] != 0 && (pr == rows || std::llabs(m[i][j]) < std::llabs(m[pr][pc]))) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == rows) break;  // trailing block is zero
      std::swap(m[t], m[pr]);
      swap_cols(t, pc);

      bool clean = true;
      const Int piv = m[t][t];
      for (std::size_t i = t + 1; i < rows; ++i) {
        const Int q = floor_div(m[i][t], piv);
        if (q != 0) {
          for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        }
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const Int q = floor_div(m[t][j], piv);
        if (q != 0) {
          for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        }
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold any offending row into row t and go again.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m[i][j] % piv != 0) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
  }

  std::vector<Int> out(diag);
  for (std::size_t t = 0; t < diag; ++t) out[t] = std::llabs(m[t][t]);
  return out;
}

// |Z^n / rowspan(relations)|, n = number of columns.
inline Int snf_quotient_order(const IntMatrix& relations) {
  if (relations.empty()) throw infinite_quotient_error();
  const std::size_t cols = relations.front().size();
  const std::vector<Int> d = smith_invariants(relations);
  if (d.size() < cols) throw infinite_quotient_error();
  Int order = 1;
  for (Int v : d) {
    if (v == 0) throw infinite_quotient_error();
    order *= v;
  }
  return order;
}

}  // namespace wpl

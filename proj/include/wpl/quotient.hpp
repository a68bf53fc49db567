#pragma once

// The finite quotient L / Z*omega for non-tubular weights.

#include <cstdlib>
#include <deque>
#include <map>
#include <stdexcept>
#include <vector>

#include "wpl/lgroup.hpp"
#include "wpl/smith.hpp"

namespace wpl {

// Relations of L / Z*omega in the generators x1, x2, x3:
// p1*x1 - p2*x2, p2*x2 - p3*x3, and omega = (p1-1)*x1 - x2 - x3.
inline IntMatrix omega_quotient_presentation(const WeightTriple& w) {
  return {
      {w[0], -w[1], 0},
      {0, w[1], -w[2]},
      {w[0] - 1, -1, -1},
  };
}

// |(1 - sum 1/p_i) * prod p_i| = |delta(omega)| * prod p_i / p.
inline Int omega_index_formula(const WeightTriple& w) {
  require_non_tubular(w, "omega_index_formula");
  const Int d = std::llabs(delta(omega(w)));
  return d * w.product() / w.lcm();
}

// Coset a + Z*omega has exactly one member whose degree lies in
// [0, |delta(omega)|); that member is the coset key.
inline LElement omega_coset_key(const LElement& a) {
  const WeightTriple& w = a.weights();
  require_non_tubular(w, "omega_coset_key");
  const Int d = delta(omega(w));
  const Int da = delta(a);
  const Int r = d > 0 ? -floor_div(da, d) : floor_div(da, -d);
  return a + r * omega(w);
}

class OmegaQuotient {
 public:
  // Breadth-first closure from 0 over x1, x2, x3; stops once the number of
  // cosets reaches the Smith-normal-form order of the presentation.
  explicit OmegaQuotient(const WeightTriple& w) : w_(w) {
    require_non_tubular(w, "coset_reps_mod_omega");
    order_ = snf_quotient_order(omega_quotient_presentation(w));

    std::deque<std::size_t> queue;
    insert(LElement::zero(w));
    queue.push_back(0);
    while (!queue.empty() && static_cast<Int>(reps_.size()) < order_) {
      const LElement base = reps_[queue.front()];
      queue.pop_front();
      for (int axis = 0; axis < kAxes; ++axis) {
        const LElement cand = base + LElement::generator(w, axis);
        if (!index_.contains(omega_coset_key(cand))) {
          insert(cand);
          queue.push_back(reps_.size() - 1);
        }
      }
    }
    if (static_cast<Int>(reps_.size()) != order_) {
      throw std::logic_error("coset enumeration disagrees with Smith normal form order");
    }
  }

  const WeightTriple& weights() const { return w_; }
  const std::vector<LElement>& representatives() const { return reps_; }
  std::size_t size() const { return reps_.size(); }
  Int snf_order() const { return order_; }

  // Index of the representative of a + Z*omega.
  std::size_t index_of(const LElement& a) const { return index_.at(omega_coset_key(a)); }
  const LElement& reduce(const LElement& a) const { return reps_[index_of(a)]; }

 private:
  void insert(const LElement& rep) {
    index_.emplace(omega_coset_key(rep), reps_.size());
    reps_.push_back(rep);
  }

  WeightTriple w_;
  Int order_ = 0;
  std::vector<LElement> reps_;
  std::map<LElement, std::size_t> index_;
};

inline std::vector<LElement> coset_reps_mod_omega(const WeightTriple& w) {
  return OmegaQuotient(w).representatives();
}

}  // namespace wpl

// Prints Picard-orbit and tau-orbit counts for every weight type with
// p3 <= N (default 8), one row per triple.

#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "wpl/wpl.hpp"

int main(int argc, char** argv) {
  const wpl::Int n = argc > 1 ? std::atoll(argv[1]) : 8;
  std::cout << std::left << std::setw(12) << "weights" << std::setw(10) << "class" << std::setw(8)
            << "|S|" << std::setw(8) << "pic" << std::setw(8) << "[L:Zw]" << "tau\n";
  for (wpl::Int a = 2; a <= n; ++a)
    for (wpl::Int b = a; b <= n; ++b)
      for (wpl::Int c = b; c <= n; ++c) {
        const wpl::WeightTriple w(a, b, c);
        const auto k = wpl::classify(w);
        std::cout << std::setw(12) << w.to_string() << std::setw(10) << wpl::to_string(k)
                  << std::setw(8) << w.interior_count() << std::setw(8)
                  << wpl::pic_orbit_count_formula(w);
        if (k == wpl::WeightClass::tubular) {
          std::cout << std::setw(8) << "inf" << "inf\n";
        } else {
          std::cout << std::setw(8) << wpl::omega_index_formula(w)
                    << wpl::tau_orbit_count_formula(w) << "\n";
        }
      }
}

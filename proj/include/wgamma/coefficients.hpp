#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "wgamma/rational.hpp"

namespace wgamma {

// Coefficient families of the Windschitl-type expansions, all exact
// rationals.  Recurrences are pure integer/rational arithmetic, so values
// are bit-identical across runs and platforms.  Practical index ceiling:
// n <= 64 (Bernoulli growth makes deeper truncations useless for the target
// x ranges).

// a_n = (2n(2n-2)! - 2^(2n-1)) B_2n / (2n (2n)!);  a_1 = a_2 = 0.
Rational coeff_a(unsigned n);  // n >= 1

// a*_n = ((n+1)(n-1)! - 2^n) B_(n+1) / ((n+1)(n+1)!);  a*_(2k-1) = a_k and
// a*_(2k) = 0 (B_(n+1) vanishes for odd n+1 >= 3).
Rational coeff_a_star(unsigned n);  // n >= 1

// b_0 = 1;  b_n = (1/n) sum_{k=1}^{n} k a*_k b_(n-k)  — the exp-composition
// recurrence, equivalent to the expanded form with explicit Bernoulli
// factors.  Memoized.
Rational coeff_b(unsigned n);

// c_0 = 1, c_1 = 0;
// c_n = 6 B_(2n+2)/((n+1)(2n+1)) - 6 sum_{k=1}^{n} 2^(2k+2) B_(2k+2)
//       / (2(k+1)(2k+2)!) * c_(n-k).  Memoized.
Rational coeff_c(unsigned n);

// (a'_n, a''_n) = (B_2n/(2n(2n-1)), 2^(2n) B_2n/(2n(2n)!));
// identity a'_n - a''_n/2 = a_n holds exactly.
std::pair<Rational, Rational> coeff_stirling(unsigned n);  // n >= 1

// Fixed correction constants of Lu, Song and Ma's sinh-argument expansion:
// [(7, 1/810), (9, -67/42525), (11, 19/8505)].
std::vector<std::pair<unsigned, Rational>> lu_constants();

// CLI-facing family listing.  family is one of "a", "astar", "b", "c",
// "stirling" (two values per row), "lu" (fixed rows, n_max ignored).
// Throws std::invalid_argument for an unknown family name.
struct FamilyRow {
  unsigned n;
  std::vector<Rational> values;
};
std::vector<FamilyRow> family_table(std::string_view family, unsigned n_max);

}  // namespace wgamma

#pragma once

#include "wgamma/interval.hpp"

namespace wgamma {

enum class BracketKind { Lower, Upper, Enclosure };

// A truncated series evaluation carrying a rigorous bracket of the limit.
// For Enclosure, the exact value of the bracketed quantity lies in `value`
// (alternating even/odd truncations, endpoints rounded outward).
struct TruncatedSeries {
  int terms_used;  // highest series index included in the lower truncation
  Interval value;
  BracketKind bracket;
};

// Enclosure of ln(sinh t / t) between even/odd truncations of
//   sum_{k>=1} 2^(2k) B_2k t^(2k) / (2k (2k)!):
//   sum_{k<=2n} ... < ln(sinh t / t) < sum_{k<=2n-1} ...      (t > 0).
// The series itself requires |t| < pi; t <= 0 or t >= pi is a domain error.
TruncatedSeries ln_sinh_over_t(const Real& t, int n, long precision_bits);
TruncatedSeries ln_sinh_over_t(const Interval& t, int n, long precision_bits);

// Enclosure of ln( Gamma(x+1) / (sqrt(2 pi x) (x/e)^x) ) between even/odd
// truncations of sum_{k>=1} B_2k / (2k(2k-1) x^(2k-1)); valid for all x > 0.
TruncatedSeries stirling_exponent(const Real& x, int n, long precision_bits);
TruncatedSeries stirling_exponent(const Interval& x, int n, long precision_bits);

}  // namespace wgamma

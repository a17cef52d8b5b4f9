#pragma once

#include <string>

#include "wgamma/rational.hpp"
#include "wgamma/real.hpp"

namespace wgamma {

// Closed interval [lo, hi].  The contract: the interval returned by any
// operation contains the exact mathematical result for every choice of
// operand members (outward rounding, one directed rounding per endpoint).
class Interval {
 public:
  Interval(Real lo, Real hi);  // throws std::invalid_argument if lo > hi or NaN
  static Interval point(Real x);
  static Interval of_long(long v, long precision_bits);

  const Real& lo() const { return lo_; }
  const Real& hi() const { return hi_; }
  long precision_bits() const;

  bool contains(const Real& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& inner) const;
  bool contains_zero() const;
  bool overlaps(const Interval& other) const;
  bool strictly_positive() const { return lo_.sign() > 0; }
  bool strictly_negative() const { return hi_.sign() < 0; }

  Real width(long precision_bits) const;     // hi - lo, rounded up
  Real midpoint(long precision_bits) const;  // (lo + hi) / 2, to nearest
  Real magnitude() const;                    // max(|lo|, |hi|), exact
  // width / |interval|: width/|lo or hi nearest zero| for sign-definite
  // intervals, plain width otherwise; rounded up.
  Real relative_width(long precision_bits) const;

  std::string str(long digits) const;  // "[lo, hi]"

 private:
  Real lo_, hi_;
};

Interval add(const Interval& a, const Interval& b, long precision_bits);
Interval sub(const Interval& a, const Interval& b, long precision_bits);
Interval mul(const Interval& a, const Interval& b, long precision_bits);
// Throws std::domain_error when b contains zero.
Interval div(const Interval& a, const Interval& b, long precision_bits);
Interval neg(const Interval& x);  // exact
Interval abs(const Interval& x);  // exact
Interval sqr(const Interval& x, long precision_bits);
// x^k for x.lo >= 0 (monotone endpoint powers).
Interval pow_ui(const Interval& x, unsigned long k, long precision_bits);

// Contained image of e^x; throws std::range_error if the exponent range of
// the representation overflows.
Interval interval_exp(const Interval& x, long precision_bits);
// Requires x.lo > 0, else std::domain_error.
Interval interval_ln(const Interval& x, long precision_bits);
Interval interval_sinh(const Interval& x, long precision_bits);
// Requires x.lo >= 0.
Interval interval_sqrt(const Interval& x, long precision_bits);
// base^exponent = exp(exponent * ln(base)); requires base.lo > 0.
Interval interval_pow(const Interval& base, const Interval& exponent, long precision_bits);
Interval rational_to_interval(const Rational& q, long precision_bits);
Interval pi_interval(long precision_bits);
// e = exp(1), computed at the working precision.
Interval e_interval(long precision_bits);

// Convenience operators at the larger operand precision.
inline Interval operator+(const Interval& a, const Interval& b) {
  return add(a, b, std::max(a.precision_bits(), b.precision_bits()));
}
inline Interval operator-(const Interval& a, const Interval& b) {
  return sub(a, b, std::max(a.precision_bits(), b.precision_bits()));
}
inline Interval operator*(const Interval& a, const Interval& b) {
  return mul(a, b, std::max(a.precision_bits(), b.precision_bits()));
}
inline Interval operator/(const Interval& a, const Interval& b) {
  return div(a, b, std::max(a.precision_bits(), b.precision_bits()));
}
inline Interval operator-(const Interval& x) { return neg(x); }

}  // namespace wgamma

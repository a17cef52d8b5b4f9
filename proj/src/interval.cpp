#include "wgamma/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace wgamma {

Interval::Interval(Real lo, Real hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.is_nan() || hi_.is_nan())
    throw std::invalid_argument("Interval: NaN endpoint");
  if (!(lo_ <= hi_))
    throw std::invalid_argument("Interval: lo > hi (" + lo_.scientific(8) + " > " +
                                hi_.scientific(8) + ")");
}

Interval Interval::point(Real x) {
  Real copy = x;
  return Interval(std::move(copy), std::move(x));
}

Interval Interval::of_long(long v, long precision_bits) {
  return point(Real::of_long(v, precision_bits));
}

long Interval::precision_bits() const {
  return std::max(lo_.precision_bits(), hi_.precision_bits());
}

bool Interval::contains(const Interval& inner) const {
  return lo_ <= inner.lo_ && inner.hi_ <= hi_;
}

bool Interval::contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }

bool Interval::overlaps(const Interval& other) const {
  return lo_ <= other.hi_ && other.lo_ <= hi_;
}

Real Interval::width(long precision_bits) const {
  return sub(hi_, lo_, precision_bits, Rounding::Up);
}

Real Interval::midpoint(long precision_bits) const {
  Real s = add(lo_, hi_, precision_bits, Rounding::Nearest);
  mpfr_div_2ui(s.mutable_raw(), s.raw(), 1, MPFR_RNDN);  // exact halving
  return s;
}

Real Interval::magnitude() const {
  Real al = abs(lo_), ah = abs(hi_);
  return al > ah ? al : ah;
}

Real Interval::relative_width(long precision_bits) const {
  Real w = width(precision_bits);
  if (contains_zero()) return w;
  Real nearest = strictly_positive() ? lo_ : neg(hi_);
  return div(w, nearest, precision_bits, Rounding::Up);
}

std::string Interval::str(long digits) const {
  return "[" + lo_.scientific(digits) + ", " + hi_.scientific(digits) + "]";
}

Interval add(const Interval& a, const Interval& b, long precision_bits) {
  return Interval(add(a.lo(), b.lo(), precision_bits, Rounding::Down),
                  add(a.hi(), b.hi(), precision_bits, Rounding::Up));
}

Interval sub(const Interval& a, const Interval& b, long precision_bits) {
  return Interval(sub(a.lo(), b.hi(), precision_bits, Rounding::Down),
                  sub(a.hi(), b.lo(), precision_bits, Rounding::Up));
}

Interval mul(const Interval& a, const Interval& b, long precision_bits) {
  const Real* as[2] = {&a.lo(), &a.hi()};
  const Real* bs[2] = {&b.lo(), &b.hi()};
  Real lo, hi;
  bool first = true;
  for (const Real* x : as) {
    for (const Real* y : bs) {
      Real d = mul(*x, *y, precision_bits, Rounding::Down);
      Real u = mul(*x, *y, precision_bits, Rounding::Up);
      if (first) {
        lo = d;
        hi = u;
        first = false;
      } else {
        if (d < lo) lo = d;
        if (u > hi) hi = u;
      }
    }
  }
  return Interval(std::move(lo), std::move(hi));
}

Interval div(const Interval& a, const Interval& b, long precision_bits) {
  if (b.contains_zero())
    throw std::domain_error("Interval: division by an interval containing zero");
  const Real* as[2] = {&a.lo(), &a.hi()};
  const Real* bs[2] = {&b.lo(), &b.hi()};
  Real lo, hi;
  bool first = true;
  for (const Real* x : as) {
    for (const Real* y : bs) {
      Real d = div(*x, *y, precision_bits, Rounding::Down);
      Real u = div(*x, *y, precision_bits, Rounding::Up);
      if (first) {
        lo = d;
        hi = u;
        first = false;
      } else {
        if (d < lo) lo = d;
        if (u > hi) hi = u;
      }
    }
  }
  return Interval(std::move(lo), std::move(hi));
}

Interval neg(const Interval& x) { return Interval(neg(x.hi()), neg(x.lo())); }

Interval abs(const Interval& x) {
  if (x.lo().sign() >= 0) return x;
  if (x.hi().sign() <= 0) return neg(x);
  Real hi = x.magnitude();
  return Interval(Real(hi.precision_bits()), std::move(hi));
}

Interval sqr(const Interval& x, long precision_bits) {
  if (x.lo().sign() >= 0)
    return Interval(mul(x.lo(), x.lo(), precision_bits, Rounding::Down),
                    mul(x.hi(), x.hi(), precision_bits, Rounding::Up));
  if (x.hi().sign() <= 0)
    return Interval(mul(x.hi(), x.hi(), precision_bits, Rounding::Down),
                    mul(x.lo(), x.lo(), precision_bits, Rounding::Up));
  Real m = x.magnitude();
  return Interval(Real(precision_bits), mul(m, m, precision_bits, Rounding::Up));
}

Interval pow_ui(const Interval& x, unsigned long k, long precision_bits) {
  if (x.lo().sign() < 0)
    throw std::domain_error("Interval: pow_ui requires a non-negative base");
  Real lo(precision_bits), hi(precision_bits);
  mpfr_pow_ui(lo.mutable_raw(), x.lo().raw(), k, MPFR_RNDD);
  mpfr_pow_ui(hi.mutable_raw(), x.hi().raw(), k, MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

namespace {

using UnaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

// Image of a monotonically increasing function: endpoints map directly.
Interval monotone_increasing(UnaryFn fn, const Interval& x, long precision_bits) {
  Real lo(precision_bits), hi(precision_bits);
  fn(lo.mutable_raw(), x.lo().raw(), MPFR_RNDD);
  fn(hi.mutable_raw(), x.hi().raw(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

}  // namespace

Interval interval_exp(const Interval& x, long precision_bits) {
  Interval r = monotone_increasing(mpfr_exp, x, precision_bits);
  if (r.hi().is_inf())
    throw std::range_error("interval_exp: exponent range overflow at " +
                           x.hi().scientific(8));
  return r;
}

Interval interval_ln(const Interval& x, long precision_bits) {
  if (x.lo().sign() <= 0)
    throw std::domain_error("interval_ln: requires lo > 0, got " + x.lo().scientific(8));
  return monotone_increasing(mpfr_log, x, precision_bits);
}

Interval interval_sinh(const Interval& x, long precision_bits) {
  return monotone_increasing(mpfr_sinh, x, precision_bits);
}

Interval interval_sqrt(const Interval& x, long precision_bits) {
  if (x.lo().sign() < 0)
    throw std::domain_error("interval_sqrt: requires lo >= 0, got " +
                            x.lo().scientific(8));
  return monotone_increasing(mpfr_sqrt, x, precision_bits);
}

Interval interval_pow(const Interval& base, const Interval& exponent, long precision_bits) {
  if (base.lo().sign() <= 0)
    throw std::domain_error("interval_pow: requires base.lo > 0, got " +
                            base.lo().scientific(8));
  return interval_exp(mul(exponent, interval_ln(base, precision_bits), precision_bits),
                      precision_bits);
}

Interval rational_to_interval(const Rational& q, long precision_bits) {
  return Interval(Real::of_rational(q, precision_bits, Rounding::Down),
                  Real::of_rational(q, precision_bits, Rounding::Up));
}

Interval pi_interval(long precision_bits) {
  return Interval(pi(precision_bits, Rounding::Down), pi(precision_bits, Rounding::Up));
}

Interval e_interval(long precision_bits) {
  return interval_exp(Interval::of_long(1, precision_bits), precision_bits);
}

}  // namespace wgamma

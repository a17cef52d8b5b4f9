#pragma once

#include <mpfr.h>

#include <string>
#include <string_view>

#include "wgamma/rational.hpp"

namespace wgamma {

enum class Rounding { Down, Nearest, Up };

mpfr_rnd_t to_mpfr_rnd(Rounding r);

// Arbitrary-precision binary floating value with an explicit mantissa width.
// Every operation at precision p has relative error <= 2^(1-p); the directed
// variants (Rounding::Down / Rounding::Up) never round past the exact result.
// Widths below 64 bits are rejected at construction.
class Real {
 public:
  static constexpr long kMinPrecision = 64;
  static constexpr long kMaxPrecision = 1L << 20;

  Real();                              // 0 at 64 bits
  explicit Real(long precision_bits);  // 0 at the given width
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real of_long(long value, long precision_bits);
  static Real of_double(double value, long precision_bits);
  static Real of_rational(const Rational& q, long precision_bits, Rounding r);
  // Decimal string, e.g. "1.25", "6.138e-13"; no double-precision intermediate.
  static Real parse(std::string_view decimal, long precision_bits,
                    Rounding r = Rounding::Nearest);
  // 2^e, exact.
  static Real pow2(long e, long precision_bits);

  long precision_bits() const { return mpfr_get_prec(v_); }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_inf() const { return mpfr_inf_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  Real rounded_to(long precision_bits, Rounding r) const;

  // Scientific notation with `digits` significant digits and a bare decimal
  // exponent: "1.832e-4", "3.6288e6", "0.000e0".
  std::string scientific(long digits) const;
  // Digit count determined by the precision: ceil(0.301 * precision_bits).
  std::string scientific() const;
  // Shortest human-friendly form for grid labels: "1", "1.25", "100".
  std::string compact() const;

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr mutable_raw() { return v_; }

 private:
  mpfr_t v_;
};

// Arithmetic at an explicit result precision and rounding direction.
Real add(const Real& a, const Real& b, long precision_bits, Rounding r);
Real sub(const Real& a, const Real& b, long precision_bits, Rounding r);
Real mul(const Real& a, const Real& b, long precision_bits, Rounding r);
Real div(const Real& a, const Real& b, long precision_bits, Rounding r);
Real sqrt(const Real& x, long precision_bits, Rounding r);
Real exp(const Real& x, long precision_bits, Rounding r);
Real log(const Real& x, long precision_bits, Rounding r);
Real sinh(const Real& x, long precision_bits, Rounding r);
Real pow(const Real& base, const Real& exponent, long precision_bits, Rounding r);
Real abs(const Real& x);  // exact
Real neg(const Real& x);  // exact
Real pi(long precision_bits, Rounding r);

}  // namespace wgamma

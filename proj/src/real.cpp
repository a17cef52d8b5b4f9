#include "wgamma/real.hpp"

#include <cmath>
#include <stdexcept>

namespace wgamma {

namespace {

long checked_precision(long precision_bits) {
  if (precision_bits < Real::kMinPrecision || precision_bits > Real::kMaxPrecision)
    throw std::invalid_argument("Real: precision_bits must lie in [64, 2^20], got " +
                                std::to_string(precision_bits));
  return precision_bits;
}

}  // namespace

mpfr_rnd_t to_mpfr_rnd(Rounding r) {
  switch (r) {
    case Rounding::Down: return MPFR_RNDD;
    case Rounding::Up: return MPFR_RNDU;
    case Rounding::Nearest: break;
  }
  return MPFR_RNDN;
}

Real::Real() : Real(kMinPrecision) {}

Real::Real(long precision_bits) {
  mpfr_init2(v_, checked_precision(precision_bits));
  mpfr_set_zero(v_, 1);
}

Real::Real(const Real& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::of_long(long value, long precision_bits) {
  Real r(precision_bits);
  mpfr_set_si(r.v_, value, MPFR_RNDN);  // exact: precision >= 64
  return r;
}

Real Real::of_double(double value, long precision_bits) {
  Real r(precision_bits);
  mpfr_set_d(r.v_, value, MPFR_RNDN);
  return r;
}

Real Real::of_rational(const Rational& q, long precision_bits, Rounding r) {
  Real out(precision_bits);
  mpfr_set_q(out.v_, q.value().get_mpq_t(), to_mpfr_rnd(r));
  return out;
}

Real Real::parse(std::string_view decimal, long precision_bits, Rounding r) {
  Real out(precision_bits);
  std::string s(decimal);
  char* end = nullptr;
  mpfr_strtofr(out.v_, s.c_str(), &end, 10, to_mpfr_rnd(r));
  if (end == s.c_str() || *end != '\0')
    throw std::invalid_argument("Real: cannot parse decimal \"" + s + "\"");
  return out;
}

Real Real::pow2(long e, long precision_bits) {
  Real out(precision_bits);
  mpfr_set_ui_2exp(out.v_, 1, e, MPFR_RNDN);
  return out;
}

Real Real::rounded_to(long precision_bits, Rounding r) const {
  Real out(precision_bits);
  mpfr_set(out.v_, v_, to_mpfr_rnd(r));
  return out;
}

std::string Real::scientific(long digits) const {
  if (digits < 1) digits = 1;
  if (is_nan()) return "nan";
  if (is_inf()) return sign() < 0 ? "-inf" : "inf";
  if (is_zero()) {
    std::string m = "0";
    if (digits > 1) m += "." + std::string(static_cast<size_t>(digits - 1), '0');
    return m + "e0";
  }
  mpfr_exp_t e = 0;
  char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
  std::string str(raw);
  mpfr_free_str(raw);
  std::string sign_part;
  if (!str.empty() && str[0] == '-') {
    sign_part = "-";
    str.erase(0, 1);
  }
  std::string mant = str.substr(0, 1);
  if (str.size() > 1) mant += "." + str.substr(1);
  return sign_part + mant + "e" + std::to_string(static_cast<long>(e) - 1);
}

std::string Real::scientific() const {
  long digits = static_cast<long>(std::ceil(0.301 * static_cast<double>(precision_bits())));
  return scientific(digits);
}

std::string Real::compact() const {
  char buf[160];
  mpfr_snprintf(buf, sizeof(buf), "%.12Rg", v_);
  return buf;
}

namespace {

using BinaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
using UnaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

Real binary(BinaryFn fn, const Real& a, const Real& b, long precision_bits, Rounding r) {
  Real out(precision_bits);
  fn(out.mutable_raw(), a.raw(), b.raw(), to_mpfr_rnd(r));
  return out;
}

Real unary(UnaryFn fn, const Real& x, long precision_bits, Rounding r) {
  Real out(precision_bits);
  fn(out.mutable_raw(), x.raw(), to_mpfr_rnd(r));
  return out;
}

}  // namespace

Real add(const Real& a, const Real& b, long precision_bits, Rounding r) {
  return binary(mpfr_add, a, b, precision_bits, r);
}
Real sub(const Real& a, const Real& b, long precision_bits, Rounding r) {
  return binary(mpfr_sub, a, b, precision_bits, r);
}
Real mul(const Real& a, const Real& b, long precision_bits, Rounding r) {
  return binary(mpfr_mul, a, b, precision_bits, r);
}
Real div(const Real& a, const Real& b, long precision_bits, Rounding r) {
  return binary(mpfr_div, a, b, precision_bits, r);
}
Real sqrt(const Real& x, long precision_bits, Rounding r) {
  return unary(mpfr_sqrt, x, precision_bits, r);
}
Real exp(const Real& x, long precision_bits, Rounding r) {
  return unary(mpfr_exp, x, precision_bits, r);
}
Real log(const Real& x, long precision_bits, Rounding r) {
  return unary(mpfr_log, x, precision_bits, r);
}
Real sinh(const Real& x, long precision_bits, Rounding r) {
  return unary(mpfr_sinh, x, precision_bits, r);
}
Real pow(const Real& base, const Real& exponent, long precision_bits, Rounding r) {
  return binary(mpfr_pow, base, exponent, precision_bits, r);
}

Real abs(const Real& x) {
  Real out(x.precision_bits());
  mpfr_abs(out.mutable_raw(), x.raw(), MPFR_RNDN);
  return out;
}

Real neg(const Real& x) {
  Real out(x.precision_bits());
  mpfr_neg(out.mutable_raw(), x.raw(), MPFR_RNDN);
  return out;
}

Real pi(long precision_bits, Rounding r) {
  Real out(precision_bits);
  mpfr_const_pi(out.mutable_raw(), to_mpfr_rnd(r));
  return out;
}

}  // namespace wgamma

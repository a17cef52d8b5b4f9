#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace wgamma {

// Exact rational number, stored canonically: denominator > 0 and
// gcd(|numerator|, denominator) == 1.  Arithmetic is exact and closed.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long numerator, long denominator = 1);
  Rational(const mpz_class& numerator, const mpz_class& denominator);
  explicit Rational(const mpq_class& q);

  // Accepts "p/q" or "p" with decimal integers; throws std::invalid_argument
  // on malformed input or a zero denominator.
  static Rational parse(std::string_view text);

  const mpq_class& value() const { return q_; }
  mpz_class numerator() const { return mpz_class(q_.get_num()); }
  mpz_class denominator() const { return mpz_class(q_.get_den()); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  Rational abs() const;

  // Always "p/q", denominator explicit: "0/1", "1/6", "-11/18900".
  std::string str() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);  // throws std::domain_error on /0

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& v) { return Rational(mpq_class(-v.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& v);

 private:
  mpq_class q_;
};

}  // namespace wgamma

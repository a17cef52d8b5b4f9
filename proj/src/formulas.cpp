#include "wgamma/formulas.hpp"

#include <stdexcept>

#include "wgamma/bernoulli.hpp"
#include "wgamma/coefficients.hpp"

namespace wgamma {

std::string_view formula_name(FormulaId id) {
  switch (id) {
    case FormulaId::W0: return "w0";
    case FormulaId::W1: return "w1";
    case FormulaId::W01: return "w01";
    case FormulaId::W01Star: return "w01star";
    case FormulaId::Wc1: return "wc1";
    case FormulaId::Wl1: return "wl1";
  }
  return "?";
}

std::optional<FormulaId> parse_formula(std::string_view name) {
  for (FormulaId id : kAllFormulas)
    if (formula_name(id) == name) return id;
  return std::nullopt;
}

namespace {

// Shared pieces of every formula at a given x and precision.
struct Core {
  Interval x;        // [x, x]
  Interval t;        // 1/x
  Interval s;        // x sinh(1/x), computed as sinh(t)/t
  Interval half_x;   // x/2
  Interval pref_log; // ln( sqrt(2 pi x) (x/e)^x )
};

Core make_core(const Real& xv, long p) {
  if (xv.is_nan() || !xv.is_finite() || xv.sign() <= 0)
    throw std::domain_error("formula evaluation requires finite x > 0");
  Core c{Interval::point(xv), Interval::point(xv), Interval::point(xv),
         Interval::point(xv), Interval::point(xv)};
  Interval one = Interval::of_long(1, p);
  c.t = div(one, c.x, p);
  c.s = div(interval_sinh(c.t, p), c.t, p);
  c.half_x = div(c.x, Interval::of_long(2, p), p);
  Interval two_pi = mul(Interval::of_long(2, p), pi_interval(p), p);
  Interval half_log = mul(interval_ln(mul(two_pi, c.x, p), p),
                          rational_to_interval(Rational(1, 2), p), p);
  c.pref_log = add(half_log, mul(c.x, sub(interval_ln(c.x, p), one, p), p), p);
  return c;
}

// The sinh-power base of the formula: s itself, or a corrected variant.
Interval formula_base(FormulaId id, const Core& c, long p) {
  switch (id) {
    case FormulaId::W1:
      return add(c.s, mul(pow_ui(c.t, 6, p), rational_to_interval(Rational(1, 810), p), p), p);
    case FormulaId::Wl1: {
      Interval arg = add(c.t, mul(pow_ui(c.t, 7, p),
                                  rational_to_interval(Rational(1, 810), p), p), p);
      return div(interval_sinh(arg, p), c.t, p);
    }
    default:
      return c.s;
  }
}

// Exponent applied to the base: x/2 everywhere except Wc1.
Interval formula_exponent(FormulaId id, const Core& c, long p) {
  if (id == FormulaId::Wc1) {
    Interval corr = mul(pow_ui(c.t, 4, p), rational_to_interval(Rational(1, 135), p), p);
    return mul(c.half_x, add(Interval::of_long(1, p), corr, p), p);
  }
  return c.half_x;
}

// Additive log-space correction beyond the powered base.
std::optional<Interval> formula_log_correction(FormulaId id, const Core& c, long p) {
  switch (id) {
    case FormulaId::W01:
      return mul(pow_ui(c.t, 5, p), rational_to_interval(Rational(1, 1620), p), p);
    case FormulaId::W01Star: {
      Interval term = mul(pow_ui(c.t, 5, p), rational_to_interval(Rational(1, 1620), p), p);
      return interval_ln(add(Interval::of_long(1, p), term, p), p);
    }
    default:
      return std::nullopt;
  }
}

Interval log_eval(FormulaId id, const Core& c, long p) {
  Interval base = formula_base(id, c, p);
  Interval expo = formula_exponent(id, c, p);
  Interval out = add(c.pref_log, mul(expo, interval_ln(base, p), p), p);
  if (auto corr = formula_log_correction(id, c, p)) out = add(out, *corr, p);
  return out;
}

// Direct (non-log) evaluation; used below the overflow-comfort threshold.
Interval direct_eval(FormulaId id, const Core& c, long p) {
  Interval two_pi_x = mul(mul(Interval::of_long(2, p), pi_interval(p), p), c.x, p);
  Interval pref = mul(interval_sqrt(two_pi_x, p),
                      interval_pow(div(c.x, e_interval(p), p), c.x, p), p);
  Interval out = mul(pref, interval_pow(formula_base(id, c, p),
                                        formula_exponent(id, c, p), p), p);
  if (id == FormulaId::W01) {
    out = mul(out, interval_exp(*formula_log_correction(id, c, p), p), p);
  } else if (id == FormulaId::W01Star) {
    Interval term = mul(pow_ui(c.t, 5, p), rational_to_interval(Rational(1, 1620), p), p);
    out = mul(out, add(Interval::of_long(1, p), term, p), p);
  }
  return out;
}

const Real& direct_threshold() {
  static const Real t = Real::of_long(30, 64);
  return t;
}

}  // namespace

Interval log_formula(FormulaId id, const Real& x, long precision_bits) {
  return log_eval(id, make_core(x, precision_bits), precision_bits);
}

Interval eval_formula(FormulaId id, const Real& x, long precision_bits) {
  Core c = make_core(x, precision_bits);
  if (x <= direct_threshold()) return direct_eval(id, c, precision_bits);
  return interval_exp(log_eval(id, c, precision_bits), precision_bits);
}

namespace {

void check_truncation(const ExpansionSpec& spec) {
  int min_n = 0;
  switch (spec.family) {
    case ExpansionFamily::ExpSeries: min_n = 3; break;
    case ExpansionFamily::MultSeries: min_n = 5; break;
    case ExpansionFamily::ExponentSeries: min_n = 2; break;
  }
  if (spec.truncation_n < min_n)
    throw std::invalid_argument("eval_expansion: truncation_n below the first nonzero index");
}

Interval log_eval_expansion(const ExpansionSpec& spec, const Core& c, long p) {
  Interval one = Interval::of_long(1, p);
  Interval ln_s = interval_ln(c.s, p);
  Interval base_log = add(c.pref_log, mul(c.half_x, ln_s, p), p);
  int n = spec.truncation_n;
  switch (spec.family) {
    case ExpansionFamily::ExpSeries: {
      // sum_{k=3}^{n} a_k t^(2k-1) = t^5 (a_3 + a_4 u + ... + a_n u^(n-3))
      Interval u = sqr(c.t, p);
      Interval acc = rational_to_interval(coeff_a(static_cast<unsigned>(n)), p);
      for (int k = n - 1; k >= 3; --k)
        acc = add(rational_to_interval(coeff_a(static_cast<unsigned>(k)), p),
                  mul(u, acc, p), p);
      return add(base_log, mul(acc, pow_ui(c.t, 5, p), p), p);
    }
    case ExpansionFamily::MultSeries: {
      // 1 + sum_{k=1}^{n} b_k t^k (zero terms kept literally)
      Interval acc = rational_to_interval(coeff_b(static_cast<unsigned>(n)), p);
      for (int k = n - 1; k >= 1; --k)
        acc = add(rational_to_interval(coeff_b(static_cast<unsigned>(k)), p),
                  mul(c.t, acc, p), p);
      Interval mult = add(one, mul(c.t, acc, p), p);
      return add(base_log, interval_ln(mult, p), p);
    }
    case ExpansionFamily::ExponentSeries: {
      // (x/2)(1 + sum_{k=2}^{n} c_k u^k), u = t^2
      Interval u = sqr(c.t, p);
      Interval acc = rational_to_interval(coeff_c(static_cast<unsigned>(n)), p);
      for (int k = n - 1; k >= 2; --k)
        acc = add(rational_to_interval(coeff_c(static_cast<unsigned>(k)), p),
                  mul(u, acc, p), p);
      Interval expo = mul(c.half_x, add(one, mul(sqr(u, p), acc, p), p), p);
      return add(c.pref_log, mul(expo, ln_s, p), p);
    }
  }
  throw std::logic_error("unreachable expansion family");
}

}  // namespace

Interval log_expansion(const ExpansionSpec& spec, const Real& x, long precision_bits) {
  check_truncation(spec);
  return log_eval_expansion(spec, make_core(x, precision_bits), precision_bits);
}

Interval eval_expansion(const ExpansionSpec& spec, const Real& x, long precision_bits) {
  return interval_exp(log_expansion(spec, x, precision_bits), precision_bits);
}

Real remainder_bound(int n, const Real& x) {
  if (n < 4)
    throw std::invalid_argument("remainder_bound: the estimate requires n >= 4");
  if (x.is_nan() || !x.is_finite() || x.sign() <= 0)
    throw std::domain_error("remainder_bound: requires finite x > 0");
  long p = std::max(x.precision_bits(), Real::kMinPrecision);
  Rational coef = bernoulli(2 * static_cast<unsigned>(n)).abs() /
                  Rational(2L * n * (2L * n - 1));
  Real num = Real::of_rational(coef, p, Rounding::Up);
  Real xpow(p);
  mpfr_pow_si(xpow.mutable_raw(), x.raw(), 2L * n - 1, MPFR_RNDD);
  return div(num, xpow, p, Rounding::Up);
}

}  // namespace wgamma

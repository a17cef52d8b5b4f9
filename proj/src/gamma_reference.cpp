#include "wgamma/gamma_reference.hpp"

#include <cmath>
#include <optional>

#include "wgamma/bernoulli.hpp"
#include "wgamma/series.hpp"

namespace wgamma {

namespace {

constexpr long kShiftBase = 20;  // X_MIN: bracket quality target for x+m
constexpr long kShiftCap = 64;
constexpr int kTermCap = 256;

// Upper bound on the bracket width at depth n, i.e. the magnitude of the
// k = 2n term |B_4n| / (4n(4n-1) y^(4n-1)).  Cheap 64-bit directed
// evaluation; only used to steer the choice of n.
Real bracket_width_bound(int n, const Real& y_lo) {
  const long p = 64;
  Rational coef = bernoulli(4 * static_cast<unsigned>(n)).abs() /
                  Rational(4L * n * (4L * n - 1));
  Real num = Real::of_rational(coef, p, Rounding::Up);
  Real ypow(p);
  mpfr_pow_si(ypow.mutable_raw(), y_lo.raw(), 4L * n - 1, MPFR_RNDD);
  return div(num, ypow, p, Rounding::Up);
}

// Smallest n whose width bound meets `goal` at shift m, or nullopt together
// with the best width seen once the alternating terms start growing.
std::optional<int> pick_terms(const Real& y_lo, const Real& goal, Real& best_seen) {
  Real prev;
  bool have_prev = false;
  for (int n = 1; n <= kTermCap; ++n) {
    Real b = bracket_width_bound(n, y_lo);
    if (!have_prev || b < best_seen) best_seen = b;
    if (b <= goal) return n;
    if (have_prev && b > prev) return std::nullopt;  // divergence reached
    prev = b;
    have_prev = true;
  }
  return std::nullopt;
}

}  // namespace

GammaEnclosure gamma_enclosure(const Real& x, const Real& target_rel_width,
                               long precision_bits) {
  if (x.is_nan() || !x.is_finite() || x.sign() <= 0)
    throw std::domain_error("gamma_enclosure: requires finite x > 0");
  Real floor_width = Real::pow2(8 - precision_bits, 64);
  if (!(target_rel_width > floor_width))
    throw PrecisionError("gamma_enclosure: target_rel_width must exceed 2^(8-precision)",
                         floor_width);

  const long p = precision_bits + 64;  // guard bits; results are returned at p
  Real goal = div(target_rel_width, Real::of_long(8, 64), 64, Rounding::Down);

  long m = std::max(0L, static_cast<long>(std::ceil(
                            static_cast<double>(kShiftBase) - x.to_double())));
  Interval X = Interval::point(x);

  int n = 0;
  Real best = floor_width;
  for (;;) {
    Real y_lo = add(x, Real::of_long(m, 64), 64, Rounding::Down);
    if (auto picked = pick_terms(y_lo, goal, best)) {
      n = *picked;
      break;
    }
    if (m >= kShiftCap)
      throw PrecisionError(
          "gamma_enclosure: target " + target_rel_width.scientific(4) +
              " unreachable within the shift cap; achievable ~" + best.scientific(4),
          best);
    m = std::min(kShiftCap, m + 8);
  }

  Interval y = add(X, Interval::of_long(m, p), p);
  TruncatedSeries bracket = stirling_exponent(y, n, p);

  // ln(sqrt(2 pi y) (y/e)^y) = ln(2 pi y)/2 + y (ln y - 1)
  Interval one = Interval::of_long(1, p);
  Interval two_pi = mul(Interval::of_long(2, p), pi_interval(p), p);
  Interval half_log = mul(interval_ln(mul(two_pi, y, p), p),
                          rational_to_interval(Rational(1, 2), p), p);
  Interval y_part = mul(y, sub(interval_ln(y, p), one, p), p);
  Interval log_shifted = add(add(half_log, y_part, p), bracket.value, p);

  Interval log_value = log_shifted;
  for (long j = 1; j <= m; ++j) {
    Interval factor = add(X, Interval::of_long(j, p), p);
    log_value = sub(log_value, interval_ln(factor, p), p);
  }

  Interval value = interval_exp(log_value, p);
  Real achieved = value.relative_width(64);
  if (!(achieved <= target_rel_width))
    throw PrecisionError("gamma_enclosure: achieved width " + achieved.scientific(4) +
                             " exceeds target " + target_rel_width.scientific(4),
                         achieved);
  return {value, log_value, static_cast<int>(m), n};
}

}  // namespace wgamma

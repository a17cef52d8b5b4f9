#include "wgamma/series.hpp"

#include <stdexcept>

#include "wgamma/coefficients.hpp"

namespace wgamma {

namespace {

// sum_{k=1}^{m} q_k u^k, Horner from the highest term down.
Interval poly_from_one(const std::vector<Rational>& q, unsigned m, const Interval& u,
                       long prec) {
  Interval acc = rational_to_interval(q[m - 1], prec);
  for (unsigned k = m - 1; k >= 1; --k) {
    acc = mul(acc, u, prec);
    acc = add(acc, rational_to_interval(q[k - 1], prec), prec);
  }
  return mul(acc, u, prec);
}

}  // namespace

TruncatedSeries ln_sinh_over_t(const Interval& t, int n, long prec) {
  if (n < 1) throw std::invalid_argument("ln_sinh_over_t: n >= 1 required");
  if (t.lo().sign() <= 0)
    throw std::domain_error("ln_sinh_over_t: requires t > 0");
  if (!(t.hi() < pi(prec, Rounding::Down)))
    throw std::domain_error("ln_sinh_over_t: requires t < pi (series validity)");
  unsigned m = 2 * static_cast<unsigned>(n);
  std::vector<Rational> q(m);  // q_k = a''_k = 2^(2k) B_2k / (2k (2k)!)
  for (unsigned k = 1; k <= m; ++k) q[k - 1] = coeff_stirling(k).second;
  Interval u = sqr(t, prec);
  Interval lower = poly_from_one(q, m, u, prec);
  Interval upper = poly_from_one(q, m - 1, u, prec);
  return {static_cast<int>(m), Interval(lower.lo(), upper.hi()), BracketKind::Enclosure};
}

TruncatedSeries ln_sinh_over_t(const Real& t, int n, long prec) {
  return ln_sinh_over_t(Interval::point(t), n, prec);
}

TruncatedSeries stirling_exponent(const Interval& x, int n, long prec) {
  if (n < 1) throw std::invalid_argument("stirling_exponent: n >= 1 required");
  if (x.lo().sign() <= 0)
    throw std::domain_error("stirling_exponent: requires x > 0");
  unsigned m = 2 * static_cast<unsigned>(n);
  std::vector<Rational> q(m);  // q_k = a'_k = B_2k / (2k(2k-1))
  for (unsigned k = 1; k <= m; ++k) q[k - 1] = coeff_stirling(k).first;
  // T_m(x) = (1/x) * sum_{k=1}^{m} q_k u^(k-1), u = 1/x^2.
  Interval inv_x = div(Interval::of_long(1, prec), x, prec);
  Interval u = sqr(inv_x, prec);
  auto tail = [&](unsigned terms) {
    Interval acc = rational_to_interval(q[terms - 1], prec);
    for (unsigned k = terms - 1; k >= 1; --k) {
      acc = mul(acc, u, prec);
      acc = add(acc, rational_to_interval(q[k - 1], prec), prec);
    }
    return mul(acc, inv_x, prec);
  };
  Interval lower = tail(m);
  Interval upper = tail(m - 1);
  return {static_cast<int>(m), Interval(lower.lo(), upper.hi()), BracketKind::Enclosure};
}

TruncatedSeries stirling_exponent(const Real& x, int n, long prec) {
  return stirling_exponent(Interval::point(x), n, prec);
}

}  // namespace wgamma

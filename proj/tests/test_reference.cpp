#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "wgamma/gamma_reference.hpp"

using namespace wgamma;
using wgamma::test::check_contains_ref;

namespace {

Real factorial_real(unsigned n, long p) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Real::of_rational(Rational(f, 1), p, Rounding::Nearest);  // exact for n <= 20
}

}  // namespace

TEST_CASE("gamma_enclosure contains the integer factorials exactly") {
  long p = 256;
  Real tgt = Real::parse("1e-30", 64);
  for (unsigned n = 1; n <= 20; ++n) {
    GammaEnclosure g = gamma_enclosure(Real::of_long(static_cast<long>(n), p), tgt, p);
    CAPTURE(n);
    CHECK(g.value.contains(factorial_real(n, 400)));
  }
}

TEST_CASE("gamma_enclosure at x = 10 pins 10! to the requested width") {
  long p = 256;
  GammaEnclosure g = gamma_enclosure(Real::of_long(10, p), Real::parse("1e-30", 64), p);
  CHECK(g.value.contains(Real::of_long(3628800, 400)));
  CHECK(g.value.relative_width(64) <= Real::parse("1e-30", 64));
}

TEST_CASE("gamma_enclosure at x = 0.5 contains sqrt(pi)/2 within 1e-25") {
  long p = 256;
  GammaEnclosure g =
      gamma_enclosure(Real::parse("0.5", p), Real::parse("1e-25", 64), p);
  check_contains_ref(g.value, wgamma::test::kSqrtPiHalf);
  CHECK(g.value.relative_width(64) <= Real::parse("1e-25", 64));
}

TEST_CASE("gamma_enclosure cross-check against an independent gamma") {
  // mpfr's own gamma, used only in tests, never by the library
  long p = 256;
  Real tgt = Real::parse("1e-40", 64);
  for (const char* xs : {"0.5", "1.5", "7.25", "23.75"}) {
    Real x = Real::parse(xs, 320);
    Real xp1 = add(x, Real::of_long(1, 320), 320, Rounding::Nearest);
    Real g_ind(320);
    mpfr_gamma(g_ind.mutable_raw(), xp1.raw(), MPFR_RNDN);
    GammaEnclosure g = gamma_enclosure(Real::parse(xs, p), tgt, p);
    CAPTURE(xs);
    CHECK(g.value.contains(g_ind));
  }
  GammaEnclosure g = gamma_enclosure(Real::parse("7.25", p), tgt, p);
  check_contains_ref(g.value, wgamma::test::kGamma8p25);
}

TEST_CASE("log_value is consistent with value and with ln Gamma(11)") {
  long p = 256;
  GammaEnclosure g = gamma_enclosure(Real::of_long(10, p), Real::parse("1e-30", 64), p);
  check_contains_ref(g.log_value, wgamma::test::kLnGamma11);
  Interval expd = interval_exp(g.log_value, p + 64);
  CHECK(expd.overlaps(g.value));
}

TEST_CASE("functional-equation self-test on random points") {
  long p = 192;
  Real tgt = Real::parse("1e-25", 64);
  std::mt19937_64 rng(424242);
  std::uniform_real_distribution<double> xd(0.5, 30.0);
  for (int i = 0; i < 50; ++i) {
    double xv = xd(rng);
    Real x = Real::of_double(xv, p);
    GammaEnclosure g0 = gamma_enclosure(x, tgt, p);
    GammaEnclosure g1 = gamma_enclosure(add(x, Real::of_long(1, p), p, Rounding::Nearest),
                                        tgt, p);
    Interval lhs = mul(g0.value, add(Interval::point(x), Interval::of_long(1, p), p), p);
    CAPTURE(xv);
    CHECK(lhs.overlaps(g1.value));
  }
}

TEST_CASE("width monotonicity in the target") {
  long p = 256;
  Real x = Real::parse("2.5", p);
  Real w_loose = gamma_enclosure(x, Real::parse("1e-10", 64), p).value.relative_width(64);
  Real w_mid = gamma_enclosure(x, Real::parse("1e-20", 64), p).value.relative_width(64);
  Real w_tight = gamma_enclosure(x, Real::parse("1e-30", 64), p).value.relative_width(64);
  CHECK(w_mid <= w_loose);
  CHECK(w_tight <= w_mid);
}

TEST_CASE("domain and precision errors") {
  long p = 128;
  CHECK_THROWS_AS(gamma_enclosure(Real::of_long(0, p), Real::parse("1e-10", 64), p),
                  std::domain_error);
  CHECK_THROWS_AS(gamma_enclosure(Real::of_long(-3, p), Real::parse("1e-10", 64), p),
                  std::domain_error);
  // below the 2^(8-p) floor
  CHECK_THROWS_AS(gamma_enclosure(Real::of_long(2, p), Real::parse("1e-40", 64), p),
                  PrecisionError);
  // unreachable within the shift cap at 4096 bits
  try {
    gamma_enclosure(Real::of_long(1, 4096), Real::parse("1e-900", 64), 4096);
    FAIL("expected PrecisionError");
  } catch (const PrecisionError& e) {
    CHECK(e.achievable_rel_width() > Real::parse("1e-900", 64));
  }
}

TEST_CASE("shift heuristic reports sensible metadata") {
  long p = 256;
  GammaEnclosure g = gamma_enclosure(Real::of_long(1, p), Real::parse("1e-30", 64), p);
  CHECK(g.shift_used == 19);
  CHECK(g.stirling_terms >= 1);
  GammaEnclosure far = gamma_enclosure(Real::of_long(1000, p), Real::parse("1e-30", 64), p);
  CHECK(far.shift_used == 0);
}

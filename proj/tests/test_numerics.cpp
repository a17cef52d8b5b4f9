#include <doctest.h>

#include <random>
#include <stdexcept>
#include <thread>

#include "test_support.hpp"
#include "wgamma/bernoulli.hpp"
#include "wgamma/interval.hpp"
#include "wgamma/rational.hpp"
#include "wgamma/real.hpp"

using namespace wgamma;
using wgamma::test::check_contains_ref;
using wgamma::test::ref;

TEST_CASE("Rational stores canonical form") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(1, -2).str() == "-1/2");
  CHECK(Rational(0, 7).str() == "0/1");
  CHECK(Rational(-11, 18900).str() == "-11/18900");
  CHECK(Rational(5).str() == "5/1");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("Rational parsing") {
  CHECK(Rational::parse("-11/18900") == Rational(-11, 18900));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
}

TEST_CASE("Rational arithmetic is exact and closed") {
  CHECK(Rational(1, 6) + Rational(1, 10) == Rational(4, 15));
  CHECK(Rational(1, 3) * Rational(3, 7) == Rational(1, 7));
  CHECK(Rational(1, 3) / Rational(2, 3) == Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 3) / Rational(0), std::domain_error);

  // round trip: (a/b + c/d) - c/d == a/b, exactly
  std::mt19937_64 rng(20240517);
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 1000000);
  for (int i = 0; i < 1000; ++i) {
    Rational a(num(rng), den(rng)), c(num(rng), den(rng));
    CHECK((a + c) - c == a);
  }
}

namespace {

// Independent Bernoulli oracle (Worpitzky):
// B_m = sum_{k=0}^{m} (-1)^k k!/(k+1) * S2(m, k), with S2 the subset
// Stirling numbers — a different route than the defining recurrence used by
// the implementation.
Rational bernoulli_worpitzky(unsigned m) {
  std::vector<std::vector<mpz_class>> s2(m + 1, std::vector<mpz_class>(m + 1, 0));
  s2[0][0] = 1;
  for (unsigned n = 1; n <= m; ++n)
    for (unsigned k = 1; k <= n; ++k)
      s2[n][k] = mpz_class(k) * s2[n - 1][k] + s2[n - 1][k - 1];
  Rational sum;
  mpz_class fact = 1;
  for (unsigned k = 0; k <= m; ++k) {
    if (k > 0) fact *= k;
    Rational term = Rational(fact, mpz_class(k + 1)) * Rational(s2[m][k], 1);
    sum += (k % 2 == 0) ? term : -term;
  }
  return sum;
}

}  // namespace

TEST_CASE("bernoulli base values") {
  CHECK(bernoulli(0) == Rational(1));
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(7) == Rational(0));
  CHECK(bernoulli(12) == Rational(-691, 2730));
}

TEST_CASE("bernoulli satisfies the defining recurrence exactly for n <= 64") {
  for (unsigned m = 1; m <= 64; ++m) {
    Rational sum;
    mpz_class binom;
    for (unsigned j = 0; j <= m; ++j) {
      mpz_bin_uiui(binom.get_mpz_t(), m + 1, j);
      sum += Rational(binom, 1) * bernoulli(j);
    }
    CAPTURE(m);
    CHECK(sum == Rational(0));
  }
}

TEST_CASE("bernoulli matches the Worpitzky oracle") {
  for (unsigned n = 0; n <= 32; ++n) {
    CAPTURE(n);
    CHECK(bernoulli(n) == bernoulli_worpitzky(n));
  }
}

TEST_CASE("bernoulli table is safe under concurrent readers") {
  std::vector<Rational> expected;
  for (unsigned n = 0; n <= 96; ++n) expected.push_back(bernoulli_worpitzky(n));
  std::vector<std::thread> threads;
  std::vector<bool> ok(8, false);
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&, t] {
      bool good = true;
      for (unsigned n = 0; n <= 96; ++n) good = good && bernoulli(n) == expected[n];
      ok[static_cast<size_t>(t)] = good;
    });
  }
  for (auto& th : threads) th.join();
  for (bool good : ok) CHECK(good);
}

TEST_CASE("Real construction enforces the precision floor") {
  CHECK_THROWS_AS(Real(32), std::invalid_argument);
  CHECK_THROWS_AS(Real(63), std::invalid_argument);
  CHECK_NOTHROW(Real(64));
  CHECK_THROWS_AS(Real::of_long(1, 8), std::invalid_argument);
}

TEST_CASE("Real parse and formatting") {
  Real q = Real::parse("0.25", 64);
  CHECK(q == Real::of_rational(Rational(1, 4), 64, Rounding::Nearest));
  CHECK_THROWS_AS(Real::parse("12garbage", 64), std::invalid_argument);
  CHECK_THROWS_AS(Real::parse("", 64), std::invalid_argument);

  CHECK(Real::parse("1.83213e-4", 128).scientific(4) == "1.832e-4");
  CHECK(Real::parse("3628800", 128).scientific(5) == "3.6288e6");
  CHECK(Real::parse("-0.5", 128).scientific(3) == "-5.00e-1");
  CHECK(Real(64).scientific(4) == "0.000e0");
  CHECK(Real::parse("1.25", 128).compact() == "1.25");
  CHECK(Real::of_long(100, 64).compact() == "100");
}

TEST_CASE("Interval invariants") {
  long p = 128;
  CHECK_THROWS_AS(Interval(Real::of_long(2, p), Real::of_long(1, p)), std::invalid_argument);
  Interval i(Real::of_long(1, p), Real::of_long(2, p));
  CHECK(i.contains(Real::parse("1.5", p)));
  CHECK(!i.contains(Real::parse("2.5", p)));
  CHECK(i.width(p) == Real::of_long(1, p));
  CHECK(Interval::point(Real::of_long(3, p)).width(p).is_zero());
}

namespace {

struct Fuzz {
  std::mt19937_64 rng{987654321};
  std::uniform_real_distribution<double> unit{0.0, 0.999};
  std::uniform_real_distribution<double> mantissa{-1.0, 1.0};
  std::uniform_int_distribution<int> expo{-8, 8};

  double value(bool positive) {
    double m = mantissa(rng);
    if (positive) m = std::abs(m) + 1e-3;
    return m * std::pow(2.0, expo(rng));
  }

  Interval around(double v, long p) {
    double w = std::abs(v) * 1e-3 + 1e-9;
    return Interval(Real::of_double(v - w, p), Real::of_double(v + w, p));
  }

  // A member strictly inside the interval.
  Real member(const Interval& iv, long p) {
    Real r = Real::of_double(unit(rng), p);
    return add(iv.lo(), mul(r, iv.width(p), p, Rounding::Down), p, Rounding::Down);
  }
};

}  // namespace

TEST_CASE("interval containment fuzz: exact results at 4x precision stay inside") {
  const long p = 128;
  const long p4 = 4 * p;
  Fuzz fuzz;
  for (int i = 0; i < 1000; ++i) {
    int op = i % 8;
    bool needs_positive = op >= 3;
    Interval a = fuzz.around(fuzz.value(needs_positive), p);
    Interval b = fuzz.around(fuzz.value(true), p);
    Real ma = fuzz.member(a, p4), mb = fuzz.member(b, p4);
    Interval got = [&] {
      switch (op) {
        case 0: return add(a, b, p);
        case 1: return sub(a, b, p);
        case 2: return mul(a, b, p);
        case 3: return div(a, b, p);
        case 4: return interval_exp(a, p);
        case 5: return interval_ln(a, p);
        case 6: return interval_sqrt(a, p);
        default: return interval_sinh(a, p);
      }
    }();
    Real exact = [&] {
      switch (op) {
        case 0: return add(ma, mb, p4, Rounding::Nearest);
        case 1: return sub(ma, mb, p4, Rounding::Nearest);
        case 2: return mul(ma, mb, p4, Rounding::Nearest);
        case 3: return div(ma, mb, p4, Rounding::Nearest);
        case 4: return exp(ma, p4, Rounding::Nearest);
        case 5: return log(ma, p4, Rounding::Nearest);
        case 6: return sqrt(ma, p4, Rounding::Nearest);
        default: return sinh(ma, p4, Rounding::Nearest);
      }
    }();
    CAPTURE(i);
    CAPTURE(op);
    CHECK(got.contains(exact));
  }
}

TEST_CASE("interval pow containment") {
  const long p = 128;
  Fuzz fuzz;
  for (int i = 0; i < 200; ++i) {
    Interval base = fuzz.around(std::abs(fuzz.value(true)) + 0.01, p);
    Interval expo = fuzz.around(fuzz.value(false), p);
    Real mb = fuzz.member(base, 4 * p), me = fuzz.member(expo, 4 * p);
    Interval got = interval_pow(base, expo, p);
    Real exact = pow(mb, me, 4 * p, Rounding::Nearest);
    CAPTURE(i);
    CHECK(got.contains(exact));
  }
}

TEST_CASE("raising precision refines intervals monotonically") {
  Fuzz fuzz;
  for (int i = 0; i < 100; ++i) {
    Interval a = fuzz.around(fuzz.value(true), 128);
    Interval b = fuzz.around(fuzz.value(true), 128);
    CHECK(add(a, b, 128).contains(add(a, b, 256)));
    CHECK(mul(a, b, 128).contains(mul(a, b, 256)));
    CHECK(div(a, b, 128).contains(div(a, b, 256)));
    CHECK(interval_exp(a, 128).contains(interval_exp(a, 256)));
    CHECK(interval_ln(a, 128).contains(interval_ln(a, 256)));
  }
}

TEST_CASE("interval_exp examples") {
  long p = 128;
  Interval zero = Interval::of_long(0, p);
  Interval one_img = interval_exp(zero, p);
  CHECK(one_img.contains(Real::of_long(1, p)));
  CHECK(one_img.width(64) <= Real::pow2(2 - p, 64));

  Interval e_img = interval_exp(Interval::of_long(1, p), p);
  check_contains_ref(e_img, wgamma::test::kE);

  Interval sym = interval_exp(Interval(Real::of_long(-1, p), Real::of_long(1, p)), p);
  Real e400 = ref(wgamma::test::kE);
  CHECK(sym.lo() <= div(Real::of_long(1, 400), e400, 400, Rounding::Nearest));
  CHECK(sym.hi() >= e400);

  CHECK_THROWS_AS(interval_exp(Interval::point(Real::parse("1e300", p)), p),
                  std::range_error);
}

TEST_CASE("interval_ln examples") {
  long p = 128;
  Interval at_one = interval_ln(Interval::of_long(1, p), p);
  CHECK(at_one.contains(Real(p)));
  CHECK(at_one.width(64) <= Real::pow2(2 - p, 64));

  CHECK(interval_ln(e_interval(p), p).contains(Real::of_long(1, p)));

  Interval mid = interval_ln(Interval(Real::parse("0.5", p), Real::of_long(2, p)), p);
  Real ln2 = ref(wgamma::test::kLn2);
  CHECK(mid.lo() <= neg(ln2.rounded_to(p, Rounding::Nearest)));
  CHECK(mid.hi() >= ln2);

  CHECK_THROWS_AS(interval_ln(Interval::of_long(0, p), p), std::domain_error);
  CHECK_THROWS_AS(interval_ln(Interval(Real::of_long(-1, p), Real::of_long(1, p)), p),
                  std::domain_error);
}

TEST_CASE("interval_sinh is accurate for tiny arguments") {
  long p = 256;
  Real t = Real::parse("1e-30", p);
  Interval s = interval_sinh(Interval::point(t), p);
  // sinh(t)/t - 1 must pin t^2/6 = 1.666...e-61 tightly
  Interval d = sub(div(s, Interval::point(t), p), Interval::of_long(1, p), p);
  CHECK(d.lo() >= Real::parse("1.66e-61", 64));
  CHECK(d.hi() <= Real::parse("1.67e-61", 64));
  check_contains_ref(interval_sinh(Interval::of_long(1, p), p), wgamma::test::kSinh1);
}

TEST_CASE("rational_to_interval outward conversion") {
  long p = 128;
  Rational q(-11, 18900);
  Interval iv = rational_to_interval(q, p);
  Real fine = Real::of_rational(q, 512, Rounding::Nearest);
  CHECK(iv.contains(fine));
  CHECK(iv.width(64) <= Real::parse("1e-40", 64));
  // exactly representable rationals produce zero-width points
  CHECK(rational_to_interval(Rational(3, 4), p).width(64).is_zero());
}

TEST_CASE("pi and e constants") {
  Interval p256 = pi_interval(256);
  CHECK(p256.contains(pi(400, Rounding::Nearest)));
  CHECK(p256.width(64) <= Real::pow2(-250, 64));
  check_contains_ref(e_interval(256), wgamma::test::kE);
}

TEST_CASE("interval division rejects zero-crossing divisors") {
  long p = 128;
  Interval num = Interval::of_long(1, p);
  Interval den(Real::of_long(-1, p), Real::of_long(1, p));
  CHECK_THROWS_AS(div(num, den, p), std::domain_error);
}

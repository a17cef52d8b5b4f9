#include "wgamma/coefficients.hpp"

#include <mutex>
#include <stdexcept>

#include "wgamma/bernoulli.hpp"

namespace wgamma {

namespace {

mpz_class factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

mpz_class pow2(unsigned long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, e);
  return p;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Rational coeff_a(unsigned n) {
  require(n >= 1, "coeff_a: n >= 1 required");
  // (2n (2n-2)! - 2^(2n-1)) / (2n (2n)!) * B_2n
  mpz_class num = 2 * static_cast<long>(n) * factorial(2 * n - 2) - pow2(2 * n - 1);
  mpz_class den = 2 * static_cast<long>(n) * factorial(2 * n);
  return Rational(num, den) * bernoulli(2 * n);
}

Rational coeff_a_star(unsigned n) {
  require(n >= 1, "coeff_a_star: n >= 1 required");
  mpz_class num = (static_cast<long>(n) + 1) * factorial(n - 1) - pow2(n);
  mpz_class den = (static_cast<long>(n) + 1) * factorial(n + 1);
  return Rational(num, den) * bernoulli(n + 1);
}

Rational coeff_b(unsigned n) {
  static std::mutex mu;
  static std::vector<Rational> memo{Rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (memo.size() <= n) {
    unsigned m = static_cast<unsigned>(memo.size());
    Rational sum;
    for (unsigned k = 1; k <= m; ++k)
      sum += Rational(static_cast<long>(k)) * coeff_a_star(k) * memo[m - k];
    memo.push_back(sum / Rational(static_cast<long>(m)));
  }
  return memo[n];
}

Rational coeff_c(unsigned n) {
  static std::mutex mu;
  static std::vector<Rational> memo{Rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (memo.size() <= n) {
    unsigned m = static_cast<unsigned>(memo.size());
    Rational head = Rational(6) * bernoulli(2 * m + 2) /
                    Rational((static_cast<long>(m) + 1) * (2 * static_cast<long>(m) + 1));
    Rational sum;
    for (unsigned k = 1; k <= m; ++k) {
      mpz_class den = 2 * (static_cast<long>(k) + 1) * factorial(2 * k + 2);
      sum += Rational(pow2(2 * k + 2), den) * bernoulli(2 * k + 2) * memo[m - k];
    }
    memo.push_back(head - Rational(6) * sum);
  }
  return memo[n];
}

std::pair<Rational, Rational> coeff_stirling(unsigned n) {
  require(n >= 1, "coeff_stirling: n >= 1 required");
  Rational b2n = bernoulli(2 * n);
  Rational prime =
      b2n / Rational(2 * static_cast<long>(n) * (2 * static_cast<long>(n) - 1));
  Rational dprime =
      Rational(pow2(2 * n), 2 * static_cast<long>(n) * factorial(2 * n)) * b2n;
  return {prime, dprime};
}

std::vector<std::pair<unsigned, Rational>> lu_constants() {
  return {{7u, Rational(1, 810)}, {9u, Rational(-67, 42525)}, {11u, Rational(19, 8505)}};
}

std::vector<FamilyRow> family_table(std::string_view family, unsigned n_max) {
  std::vector<FamilyRow> rows;
  if (family == "a") {
    for (unsigned n = 1; n <= n_max; ++n) rows.push_back({n, {coeff_a(n)}});
  } else if (family == "astar") {
    for (unsigned n = 1; n <= n_max; ++n) rows.push_back({n, {coeff_a_star(n)}});
  } else if (family == "b") {
    for (unsigned n = 0; n <= n_max; ++n) rows.push_back({n, {coeff_b(n)}});
  } else if (family == "c") {
    for (unsigned n = 0; n <= n_max; ++n) rows.push_back({n, {coeff_c(n)}});
  } else if (family == "stirling") {
    for (unsigned n = 1; n <= n_max; ++n) {
      auto [p, d] = coeff_stirling(n);
      rows.push_back({n, {p, d}});
    }
  } else if (family == "lu") {
    for (const auto& [n, v] : lu_constants()) rows.push_back({n, {v}});
  } else {
    throw std::invalid_argument("unknown coefficient family \"" + std::string(family) +
                                "\" (expected a, astar, b, c, stirling, lu)");
  }
  return rows;
}

}  // namespace wgamma

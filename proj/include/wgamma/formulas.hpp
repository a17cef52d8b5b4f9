#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "wgamma/interval.hpp"

namespace wgamma {

// The closed Windschitl-type approximations of Gamma(x+1):
//   W0   = sqrt(2 pi x) (x/e)^x (x sinh(1/x))^(x/2)
//   W1   = ... (x sinh(1/x) + 1/(810 x^6))^(x/2)
//   W01  = ... (x sinh(1/x))^(x/2) exp(1/(1620 x^5))
//   W01* = ... (x sinh(1/x))^(x/2) (1 + 1/(1620 x^5))
//   Wc1  = ... (x sinh(1/x))^((x/2)(1 + 1/(135 x^4)))
//   Wl1  = ... (x sinh(1/x + 1/(810 x^7)))^(x/2)
enum class FormulaId { W0, W1, W01, W01Star, Wc1, Wl1 };

inline constexpr std::array<FormulaId, 6> kAllFormulas = {
    FormulaId::W0,  FormulaId::W1,  FormulaId::W01,
    FormulaId::W01Star, FormulaId::Wc1, FormulaId::Wl1};

// Lowercase wire names: "w0", "w1", "w01", "w01star", "wc1", "wl1".
std::string_view formula_name(FormulaId id);
std::optional<FormulaId> parse_formula(std::string_view name);

// Truncatable expansions behind the closed formulas:
//   ExpSeries      W * exp(sum_{k=3}^{n} a_k x^-(2k-1))        (n >= 3)
//   MultSeries     W * (1 + sum_{k=1}^{n} b_k x^-k)            (n >= 5)
//   ExponentSeries prefix (x sinh 1/x)^((x/2)(1 + sum_{k=2}^{n} c_k x^-2k))
//                                                              (n >= 2)
// where W = sqrt(2 pi x)(x/e)^x (x sinh(1/x))^(x/2).  The minimal
// truncations reproduce W01, W01* and Wc1 respectively.
enum class ExpansionFamily { ExpSeries, MultSeries, ExponentSeries };
struct ExpansionSpec {
  ExpansionFamily family;
  int truncation_n;
};

// Interval containing the exact W(x); x > 0 required.
Interval eval_formula(FormulaId id, const Real& x, long precision_bits);
// Interval containing ln W(x), evaluated fully in log space.
Interval log_formula(FormulaId id, const Real& x, long precision_bits);

Interval eval_expansion(const ExpansionSpec& spec, const Real& x, long precision_bits);
Interval log_expansion(const ExpansionSpec& spec, const Real& x, long precision_bits);

// Theorem-2 tail bound |R_n(x)| <= |B_2n| / (2n(2n-1) x^(2n-1)), rounded up.
// Requires n >= 4 (contract error below) and x > 0.
Real remainder_bound(int n, const Real& x);

}  // namespace wgamma

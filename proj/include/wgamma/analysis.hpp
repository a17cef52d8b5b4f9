#pragma once

#include <string>
#include <vector>

#include "wgamma/formulas.hpp"
#include "wgamma/gamma_reference.hpp"

namespace wgamma {

// Three-state certification for strict inequalities, plus a fourth state for
// points where the two sides are certified to coincide to within 1e-30
// relative (the sharp-constant attainment in the sandwich chain).  Interval
// overlap is never reported as a violation.
enum class CheckState { Certified, Violated, Inconclusive, Equality };
std::string_view check_state_name(CheckState s);

// One certified comparison: gap = right - left for the claim left < right.
struct InequalityCheck {
  std::string left, right;
  CheckState state;
  Interval gap;
};

// Classify `gap` (an enclosure of right - left) for the strict claim
// left < right; `scale` is a positive magnitude used for the equality
// tolerance 1e-30 * scale.
CheckState classify_strict(const Interval& gap, const Real& scale, long precision_bits);

// ---- Table 1 ---------------------------------------------------------

struct ComparisonCell {
  FormulaId formula;
  Real error;               // upper bound of |W(x) - Gamma(x+1)| / Gamma(x+1)
  bool precision_starved;   // enclosure lo/hi of the error disagree by > 0.1%
};
struct ComparisonRow {
  Real x;
  std::vector<ComparisonCell> cells;
};

// Rows in input order.  The gamma oracle tolerance is chosen automatically
// at 1e-6 x the smallest expected error (x^-7 heuristic).
std::vector<ComparisonRow> comparison_table(const std::vector<Real>& xs,
                                            const std::vector<FormulaId>& formulas,
                                            long precision_bits);

// ---- rate constants --------------------------------------------------

struct RateEstimate {
  FormulaId formula;
  Real x_probe;
  Interval estimate;  // encloses x^7 (ln Gamma(x+1) - ln W(x))
  Rational target;    // the limit constant
};

// Limit of x^7 (ln Gamma(x+1) - ln W(x)) for the five x^-7 formulas;
// throws std::invalid_argument for W0 (its rate is x^-5).
Rational rate_target(FormulaId id);
RateEstimate rate_constant(FormulaId id, const Real& x_probe, long precision_bits);

// ---- inequality chains -------------------------------------------------

// W1 < Wc1 < W01* < W01 < Wl1 on a grid of x >= 1.
struct OrderingRow {
  Real x;
  std::vector<InequalityCheck> checks;
};
struct OrderingReport {
  std::vector<OrderingRow> rows;
  int violated = 0;
  int inconclusive = 0;
  int equalities = 0;
};
OrderingReport verify_ordering(const std::vector<Real>& grid, long precision_bits);

// beta0 W1(x) < Gamma(x+1) < W1(x) on a grid of x >= 1, with
// beta0 = e / sqrt(2 pi sinh 1 + pi/405) computed to working precision.
// The lower comparison is an exact equality at x = 1 (the best-constant
// attainment), reported as CheckState::Equality.
struct SandwichRow {
  Real x;
  InequalityCheck lower;  // beta0 W1(x) vs Gamma(x+1)
  InequalityCheck upper;  // Gamma(x+1) vs W1(x)
};
struct SandwichReport {
  Interval beta0;
  std::vector<SandwichRow> rows;
  int violated = 0;
  int inconclusive = 0;
  int equalities = 0;
};
Interval beta0_constant(long precision_bits);
SandwichReport verify_sandwich(const std::vector<Real>& grid, long precision_bits);

// ---- f1 shape ----------------------------------------------------------

// f1(x) = ln Gamma(x+1) - ln W1(x); enclosure tight enough for the grid's
// finite differences.
Interval f1_value(const Real& x, long precision_bits);

// Certifies positive first differences and negative second differences of
// f1 on a strictly increasing grid (>= 3 points).
struct ShapeReport {
  std::vector<Real> grid;
  std::vector<Interval> f1;
  std::vector<InequalityCheck> increase;   // f1(x_{i+1}) - f1(x_i) > 0
  std::vector<InequalityCheck> concavity;  // second difference < 0
  int violated = 0;
  int inconclusive = 0;
};
ShapeReport probe_f1_shape(const std::vector<Real>& grid, long precision_bits);

// ---- Theorem-2 remainder ------------------------------------------------

struct RemainderRow {
  int n;
  Real x;
  Interval remainder;  // encloses R_n(x)
  Real bound;          // |B_2n| / (2n(2n-1) x^(2n-1)), rounded up
  CheckState state;    // Certified iff sup |R_n(x)| <= bound
};
std::vector<RemainderRow> verify_remainder(const std::vector<int>& ns,
                                           const std::vector<Real>& xs,
                                           long precision_bits);

}  // namespace wgamma

// wgamma — Windschitl-type gamma approximations: coefficients, rigorous
// interval evaluations, Table-1 style comparisons and inequality checks.
//
// Exit codes: 0 ok/certified, 1 a checked inequality is violated, 2 usage or
// domain error, 3 precision error (target width unreachable), 4 at least one
// check inconclusive (and none violated).

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <iostream>

#include "wgamma/analysis.hpp"
#include "wgamma/analysis_io.hpp"
#include "wgamma/coefficients.hpp"

namespace {

using namespace wgamma;

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecision = 3;
constexpr int kExitInconclusive = 4;

struct GlobalOpts {
  long precision = 256;
  std::string format = "text";
  long digits = 0;  // 0: derive from precision (or 4 in table mode)
};

long default_digits(long precision_bits) {
  return static_cast<long>(std::ceil(0.301 * static_cast<double>(precision_bits)));
}

RenderOptions render_options(const GlobalOpts& g, long table_default = 0) {
  RenderOptions opt;
  auto fmt = parse_format(g.format);
  if (!fmt) throw CLI::ValidationError("--format", "expected text, csv or json");
  opt.format = *fmt;
  opt.precision_bits = g.precision;
  if (g.digits > 0)
    opt.digits = g.digits;
  else
    opt.digits = table_default > 0 ? table_default : default_digits(g.precision);
  return opt;
}

Real parse_positive_x(const std::string& text, long precision) {
  Real x = Real::parse(text, precision);
  if (!x.is_finite() || x.sign() <= 0)
    throw std::domain_error("x must be a positive decimal, got \"" + text + "\"");
  return x;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// "start:stop:step", inclusive endpoints.
std::vector<Real> parse_grid(const std::string& text, long precision) {
  auto parts = split(text, ':');
  if (parts.size() != 3)
    throw std::domain_error("grid must be start:stop:step, got \"" + text + "\"");
  Real start = Real::parse(parts[0], precision);
  Real stop = Real::parse(parts[1], precision);
  Real step = Real::parse(parts[2], precision);
  if (step.sign() <= 0 || stop < start)
    throw std::domain_error("grid requires step > 0 and stop >= start");
  double count_d = (stop.to_double() - start.to_double()) / step.to_double();
  long count = static_cast<long>(std::floor(count_d + 1e-9));
  std::vector<Real> grid;
  grid.reserve(static_cast<size_t>(count) + 1);
  for (long k = 0; k <= count; ++k) {
    Real x = add(start, mul(Real::of_long(k, precision), step, precision, Rounding::Nearest),
                 precision, Rounding::Nearest);
    grid.push_back(std::move(x));
  }
  return grid;
}

std::vector<Real> parse_x_list(const std::string& text, long precision) {
  std::vector<Real> xs;
  for (const auto& part : split(text, ','))
    xs.push_back(parse_positive_x(part, precision));
  return xs;
}

std::vector<FormulaId> parse_formula_list(const std::string& text) {
  std::vector<FormulaId> ids;
  for (const auto& part : split(text, ',')) {
    auto id = parse_formula(part);
    if (!id) throw std::domain_error("unknown formula \"" + part + "\"");
    ids.push_back(*id);
  }
  return ids;
}

int run_coeffs(const GlobalOpts& g, const std::string& family, long n_max) {
  auto rows = family_table(family, static_cast<unsigned>(std::max(0L, n_max)));
  std::cout << render_coeffs(rows, family, render_options(g));
  return kExitOk;
}

int run_approx(const GlobalOpts& g, const std::string& formula, const std::string& x_text) {
  auto id = parse_formula(formula);
  if (!id) throw std::domain_error("unknown formula \"" + formula + "\"");
  Real x = parse_positive_x(x_text, g.precision);
  Interval v = eval_formula(*id, x, g.precision);
  std::cout << render_approx(*id, x, v, render_options(g));
  return kExitOk;
}

int run_table(const GlobalOpts& g, const std::string& xs_text, const std::string& formulas_text) {
  auto xs = parse_x_list(xs_text, g.precision);
  auto formulas = parse_formula_list(formulas_text);
  auto rows = comparison_table(xs, formulas, g.precision);
  std::cout << render_table(rows, render_options(g, 4));
  return kExitOk;
}

int exit_from_counts(int violated, int inconclusive) {
  if (violated > 0) return kExitViolated;
  if (inconclusive > 0) return kExitInconclusive;
  return kExitOk;
}

int run_verify(const GlobalOpts& g, const std::string& check, const std::string& grid_text,
               const std::string& ns_text, const std::string& xs_text,
               const std::string& formula, const std::string& x_text) {
  RenderOptions opt = render_options(g);
  if (check == "ordering") {
    auto report = verify_ordering(parse_grid(grid_text, g.precision), g.precision);
    std::cout << render_ordering(report, opt);
    return exit_from_counts(report.violated, report.inconclusive);
  }
  if (check == "sandwich") {
    auto report = verify_sandwich(parse_grid(grid_text, g.precision), g.precision);
    std::cout << render_sandwich(report, opt);
    return exit_from_counts(report.violated, report.inconclusive);
  }
  if (check == "remainder") {
    auto parts = split(ns_text, ':');
    if (parts.size() != 2) throw std::domain_error("--n must be lo:hi, got \"" + ns_text + "\"");
    int lo = std::stoi(parts[0]), hi = std::stoi(parts[1]);
    if (lo > hi) throw std::domain_error("--n range is empty");
    std::vector<int> ns;
    for (int n = lo; n <= hi; ++n) ns.push_back(n);
    auto rows = verify_remainder(ns, parse_x_list(xs_text, g.precision), g.precision);
    std::cout << render_remainder(rows, opt);
    int violated = 0, inconclusive = 0;
    for (const auto& row : rows) {
      if (row.state == CheckState::Violated) ++violated;
      if (row.state == CheckState::Inconclusive) ++inconclusive;
    }
    return exit_from_counts(violated, inconclusive);
  }
  if (check == "rate") {
    auto id = parse_formula(formula);
    if (!id) throw std::domain_error("unknown formula \"" + formula + "\"");
    Real x = parse_positive_x(x_text, g.precision);
    RateEstimate est = rate_constant(*id, x, g.precision);
    // deviation from the limit shrinks like x^-2; 0.5% at x=1000
    double xd = x.to_double();
    double margin = std::min(0.05, 0.005 * (1000.0 / xd) * (1000.0 / xd));
    Interval target = rational_to_interval(est.target, g.precision);
    Interval band_half = mul(abs(target), Interval::point(Real::of_double(margin, 64)),
                             g.precision);
    Interval band = Interval(sub(target.lo(), band_half.hi(), g.precision, Rounding::Down),
                             add(target.hi(), band_half.hi(), g.precision, Rounding::Up));
    CheckState state;
    if (band.contains(est.estimate))
      state = CheckState::Certified;
    else if (!band.overlaps(est.estimate))
      state = CheckState::Violated;
    else
      state = CheckState::Inconclusive;
    std::cout << render_rate(est, margin, state, opt);
    return exit_from_counts(state == CheckState::Violated ? 1 : 0,
                            state == CheckState::Inconclusive ? 1 : 0);
  }
  if (check == "f1shape") {
    auto report = probe_f1_shape(parse_grid(grid_text, g.precision), g.precision);
    std::cout << render_shape(report, opt);
    return exit_from_counts(report.violated, report.inconclusive);
  }
  throw std::domain_error("unknown check \"" + check +
                          "\" (expected ordering, sandwich, remainder, rate, f1shape)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "wgamma — Windschitl-type approximations of the gamma function:\n"
      "exact expansion coefficients, rigorous interval evaluation of the six\n"
      "closed formulas, comparison tables and certified inequality checks."};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--precision", g.precision, "working precision in bits [64, 4096]")
      ->check(CLI::Range(64L, 4096L))
      ->capture_default_str();
  app.add_option("--format", g.format, "output format: text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--digits", g.digits, "significant digits in printed values");

  auto* coeffs = app.add_subcommand(
      "coeffs", "print a coefficient family as exact rationals (n,p/q rows)");
  std::string family;
  long n_max = 0;
  coeffs->add_option("family", family, "one of a, astar, b, c, stirling, lu")->required();
  coeffs->add_option("n_max", n_max, "largest index to print (ignored for lu)")->required();

  auto* approx = app.add_subcommand(
      "approx", "evaluate one closed formula at x (interval lo/hi and midpoint)");
  std::string formula = "w1", x_text = "1";
  approx->add_option("formula", formula, "w0, w1, w01, w01star, wc1 or wl1")->required();
  approx->add_option("x", x_text, "positive decimal argument")->required();

  auto* table = app.add_subcommand(
      "table", "relative-error comparison table (defaults reproduce the reference table)");
  std::string xs_text = "1,2,5,10,20,50,100";
  std::string formulas_text = "w1,wc1,w01,wl1";
  table->add_option("--xs", xs_text, "comma list of x values")->capture_default_str();
  table->add_option("--formulas", formulas_text, "comma list of formulas")
      ->capture_default_str();

  auto* verify = app.add_subcommand(
      "verify", "certify an inequality family: ordering, sandwich, remainder, rate, f1shape");
  std::string check, grid_text = "1:100:0.25", ns_text = "4:8";
  std::string verify_xs = "1,2,5,10", verify_formula = "w1", verify_x = "1000";
  verify->add_option("check,--check", check,
                     "ordering | sandwich | remainder | rate | f1shape");
  verify->add_option("--grid", grid_text, "grid start:stop:step, inclusive endpoints")
      ->capture_default_str();
  verify->add_option("--n", ns_text, "remainder: n range lo:hi")->capture_default_str();
  verify->add_option("--xs", verify_xs, "remainder: comma list of x values")
      ->capture_default_str();
  verify->add_option("--formula", verify_formula, "rate: formula name")
      ->capture_default_str();
  verify->add_option("--x", verify_x, "rate: probe point (>= 10)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (coeffs->parsed()) return run_coeffs(g, family, n_max);
    if (approx->parsed()) return run_approx(g, formula, x_text);
    if (table->parsed()) return run_table(g, xs_text, formulas_text);
    if (verify->parsed()) {
      if (check.empty()) throw std::domain_error("verify: a check name is required");
      return run_verify(g, check, grid_text, ns_text, verify_xs, verify_formula, verify_x);
    }
  } catch (const PrecisionError& e) {
    std::cerr << "precision error: " << e.what() << "\n";
    return kExitPrecision;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::range_error& e) {
    std::cerr << "range error: " << e.what() << "\n";
    return kExitPrecision;
  }
  return kExitUsage;
}

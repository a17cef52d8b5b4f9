#include "wgamma/analysis_io.hpp"

#include <json.hpp>
#include <sstream>

namespace wgamma {

namespace {

using nlohmann::json;

std::string pad(std::string s, size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

json json_doc(std::string_view command, const RenderOptions& opt, json rows) {
  return json{{"command", command},
              {"precision_bits", opt.precision_bits},
              {"rows", std::move(rows)}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json interval_to_json(const Interval& v, long digits) {
  return json{{"lo", v.lo().scientific(digits)}, {"hi", v.hi().scientific(digits)}};
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  return std::nullopt;
}

std::string render_table(const std::vector<ComparisonRow>& rows, const RenderOptions& opt) {
  std::vector<FormulaId> formulas;
  if (!rows.empty())
    for (const auto& cell : rows.front().cells) formulas.push_back(cell.formula);

  if (opt.format == OutputFormat::Json) {
    json jrows = json::array();
    for (const auto& row : rows) {
      json r{{"x", row.x.compact()}};
      for (const auto& cell : row.cells) {
        r[std::string(formula_name(cell.formula))] = cell.error.scientific(opt.digits);
        if (cell.precision_starved)
          r[std::string(formula_name(cell.formula)) + "_starved"] = true;
      }
      jrows.push_back(std::move(r));
    }
    return dump(json_doc("table", opt, std::move(jrows)));
  }

  std::ostringstream out;
  if (opt.format == OutputFormat::Csv) {
    out << "x";
    for (FormulaId id : formulas) out << "," << formula_name(id);
    out << "\n";
    for (const auto& row : rows) {
      out << row.x.compact();
      for (const auto& cell : row.cells) {
        out << "," << cell.error.scientific(opt.digits);
        if (cell.precision_starved) out << "*";
      }
      out << "\n";
    }
    return out.str();
  }

  const size_t col = static_cast<size_t>(opt.digits) + 10;
  out << pad("x", 10);
  for (FormulaId id : formulas) out << pad(std::string(formula_name(id)), col);
  out << "\n";
  bool any_starved = false;
  for (const auto& row : rows) {
    out << pad(row.x.compact(), 10);
    for (const auto& cell : row.cells) {
      std::string s = cell.error.scientific(opt.digits);
      if (cell.precision_starved) {
        s += "*";
        any_starved = true;
      }
      out << pad(s, col);
    }
    out << "\n";
  }
  if (any_starved) out << "(* = precision-starved cell: enclosure bounds differ by >0.1%)\n";
  return out.str();
}

std::string render_coeffs(const std::vector<FamilyRow>& rows, std::string_view family,
                          const RenderOptions& opt) {
  const bool two_cols = family == "stirling";
  if (opt.format == OutputFormat::Json) {
    json jrows = json::array();
    for (const auto& row : rows) {
      json r{{"n", row.n}};
      if (two_cols) {
        r["a_prime"] = row.values[0].str();
        r["a_dprime"] = row.values[1].str();
      } else {
        r["value"] = row.values[0].str();
      }
      jrows.push_back(std::move(r));
    }
    json doc = json_doc("coeffs", opt, std::move(jrows));
    doc["family"] = family;
    return dump(doc);
  }
  std::ostringstream out;
  if (opt.format == OutputFormat::Csv)
    out << (two_cols ? "n,a_prime,a_dprime" : "n,value") << "\n";
  for (const auto& row : rows) {
    out << row.n;
    for (const auto& v : row.values) out << "," << v.str();
    out << "\n";
  }
  return out.str();
}

std::string render_approx(FormulaId id, const Real& x, const Interval& value,
                          const RenderOptions& opt) {
  long digits = opt.digits;
  Real mid = value.midpoint(opt.precision_bits);
  if (opt.format == OutputFormat::Json) {
    json row{{"formula", formula_name(id)},
             {"x", x.compact()},
             {"lo", value.lo().scientific(digits)},
             {"hi", value.hi().scientific(digits)},
             {"mid", mid.scientific(digits)}};
    return dump(json_doc("approx", opt, json::array({row})));
  }
  std::ostringstream out;
  if (opt.format == OutputFormat::Csv) {
    out << "formula,x,lo,hi,mid\n"
        << formula_name(id) << "," << x.compact() << "," << value.lo().scientific(digits)
        << "," << value.hi().scientific(digits) << "," << mid.scientific(digits) << "\n";
  } else {
    out << "formula: " << formula_name(id) << "\n"
        << "x:       " << x.compact() << "\n"
        << "lo:      " << value.lo().scientific(digits) << "\n"
        << "hi:      " << value.hi().scientific(digits) << "\n"
        << "mid:     " << mid.scientific(digits) << "\n";
  }
  return out.str();
}

namespace {

std::string render_checks_common(std::string_view command,
                                 const std::vector<std::pair<std::string,
                                                             const InequalityCheck*>>& cells,
                                 const std::string& summary, const RenderOptions& opt) {
  if (opt.format == OutputFormat::Json) {
    json jrows = json::array();
    for (const auto& [where, chk] : cells) {
      jrows.push_back(json{{"x", where},
                           {"claim", chk->left + " < " + chk->right},
                           {"state", check_state_name(chk->state)},
                           {"gap", interval_to_json(chk->gap, opt.digits)}});
    }
    json doc = json_doc(command, opt, std::move(jrows));
    doc["summary"] = summary;
    return dump(doc);
  }
  std::ostringstream out;
  if (opt.format == OutputFormat::Csv) {
    out << "x,claim,state,gap_lo,gap_hi\n";
    for (const auto& [where, chk] : cells)
      out << where << "," << chk->left << " < " << chk->right << ","
          << check_state_name(chk->state) << "," << chk->gap.lo().scientific(opt.digits)
          << "," << chk->gap.hi().scientific(opt.digits) << "\n";
    return out.str();
  }
  for (const auto& [where, chk] : cells)
    out << pad(where, 10) << pad(chk->left + " < " + chk->right, 24)
        << pad(std::string(check_state_name(chk->state)), 14)
        << "gap " << chk->gap.str(opt.digits) << "\n";
  out << summary << "\n";
  return out.str();
}

}  // namespace

std::string render_ordering(const OrderingReport& report, const RenderOptions& opt) {
  std::vector<std::pair<std::string, const InequalityCheck*>> cells;
  for (const auto& row : report.rows)
    for (const auto& chk : row.checks) cells.emplace_back(row.x.compact(), &chk);
  std::string summary = "violated=" + std::to_string(report.violated) +
                        " inconclusive=" + std::to_string(report.inconclusive) +
                        " equalities=" + std::to_string(report.equalities);
  return render_checks_common("verify/ordering", cells, summary, opt);
}

std::string render_sandwich(const SandwichReport& report, const RenderOptions& opt) {
  std::vector<std::pair<std::string, const InequalityCheck*>> cells;
  for (const auto& row : report.rows) {
    cells.emplace_back(row.x.compact(), &row.lower);
    cells.emplace_back(row.x.compact(), &row.upper);
  }
  std::string summary = "beta0 in " + report.beta0.str(opt.digits + 6) +
                        "; violated=" + std::to_string(report.violated) +
                        " inconclusive=" + std::to_string(report.inconclusive) +
                        " equalities=" + std::to_string(report.equalities);
  return render_checks_common("verify/sandwich", cells, summary, opt);
}

std::string render_shape(const ShapeReport& report, const RenderOptions& opt) {
  std::vector<std::pair<std::string, const InequalityCheck*>> cells;
  for (size_t i = 0; i < report.increase.size(); ++i)
    cells.emplace_back(report.grid[i].compact(), &report.increase[i]);
  for (size_t i = 0; i < report.concavity.size(); ++i)
    cells.emplace_back(report.grid[i].compact(), &report.concavity[i]);
  std::string summary = "violated=" + std::to_string(report.violated) +
                        " inconclusive=" + std::to_string(report.inconclusive);
  return render_checks_common("verify/f1shape", cells, summary, opt);
}

std::string render_remainder(const std::vector<RemainderRow>& rows, const RenderOptions& opt) {
  if (opt.format == OutputFormat::Json) {
    json jrows = json::array();
    for (const auto& row : rows)
      jrows.push_back(json{{"n", row.n},
                           {"x", row.x.compact()},
                           {"remainder", interval_to_json(row.remainder, opt.digits)},
                           {"bound", row.bound.scientific(opt.digits)},
                           {"state", check_state_name(row.state)}});
    return dump(json_doc("verify/remainder", opt, std::move(jrows)));
  }
  std::ostringstream out;
  if (opt.format == OutputFormat::Csv) {
    out << "n,x,remainder_lo,remainder_hi,bound,state\n";
    for (const auto& row : rows)
      out << row.n << "," << row.x.compact() << ","
          << row.remainder.lo().scientific(opt.digits) << ","
          << row.remainder.hi().scientific(opt.digits) << ","
          << row.bound.scientific(opt.digits) << "," << check_state_name(row.state) << "\n";
    return out.str();
  }
  for (const auto& row : rows)
    out << "n=" << row.n << " " << pad("x=" + row.x.compact(), 10) << "R in "
        << row.remainder.str(opt.digits) << "  bound " << row.bound.scientific(opt.digits)
        << "  " << check_state_name(row.state) << "\n";
  return out.str();
}

std::string render_rate(const RateEstimate& est, double margin, CheckState state,
                        const RenderOptions& opt) {
  Real target_real = Real::of_rational(est.target, opt.precision_bits, Rounding::Nearest);
  if (opt.format == OutputFormat::Json) {
    json row{{"formula", formula_name(est.formula)},
             {"x", est.x_probe.compact()},
             {"estimate", interval_to_json(est.estimate, opt.digits + 6)},
             {"target", est.target.str()},
             {"target_decimal", target_real.scientific(opt.digits + 6)},
             {"margin", margin},
             {"state", check_state_name(state)}};
    return dump(json_doc("verify/rate", opt, json::array({row})));
  }
  std::ostringstream out;
  if (opt.format == OutputFormat::Csv) {
    out << "formula,x,estimate_lo,estimate_hi,target,margin,state\n"
        << formula_name(est.formula) << "," << est.x_probe.compact() << ","
        << est.estimate.lo().scientific(opt.digits + 6) << ","
        << est.estimate.hi().scientific(opt.digits + 6) << "," << est.target.str() << ","
        << margin << "," << check_state_name(state) << "\n";
    return out.str();
  }
  out << "formula:  " << formula_name(est.formula) << "\n"
      << "x:        " << est.x_probe.compact() << "\n"
      << "estimate: " << est.estimate.str(opt.digits + 6) << "\n"
      << "target:   " << est.target.str() << " = " << target_real.scientific(opt.digits + 6)
      << "\n"
      << "margin:   " << margin << "\n"
      << "state:    " << check_state_name(state) << "\n";
  return out.str();
}

}  // namespace wgamma

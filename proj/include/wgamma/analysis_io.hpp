#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "wgamma/analysis.hpp"
#include "wgamma/coefficients.hpp"

namespace wgamma {

enum class OutputFormat { Text, Csv, Json };
std::optional<OutputFormat> parse_format(std::string_view name);

// Common rendering options.  JSON output always carries
// {"command": ..., "precision_bits": ..., "rows": [...]}.
struct RenderOptions {
  OutputFormat format = OutputFormat::Text;
  long digits = 4;
  long precision_bits = 256;
};

std::string render_table(const std::vector<ComparisonRow>& rows, const RenderOptions& opt);
std::string render_coeffs(const std::vector<FamilyRow>& rows, std::string_view family,
                          const RenderOptions& opt);
std::string render_approx(FormulaId id, const Real& x, const Interval& value,
                          const RenderOptions& opt);
std::string render_ordering(const OrderingReport& report, const RenderOptions& opt);
std::string render_sandwich(const SandwichReport& report, const RenderOptions& opt);
std::string render_shape(const ShapeReport& report, const RenderOptions& opt);
std::string render_remainder(const std::vector<RemainderRow>& rows, const RenderOptions& opt);
// `margin` is the fractional half-width of the acceptance band around the
// target; `state` the resulting certification.
std::string render_rate(const RateEstimate& est, double margin, CheckState state,
                        const RenderOptions& opt);

}  // namespace wgamma

#pragma once

#include <stdexcept>

#include "wgamma/interval.hpp"

namespace wgamma {

// Requested enclosure width cannot be met; carries the best achievable
// relative width so callers can retarget.
class PrecisionError : public std::runtime_error {
 public:
  PrecisionError(const std::string& what, Real achievable_rel_width)
      : std::runtime_error(what), achievable_(std::move(achievable_rel_width)) {}
  const Real& achievable_rel_width() const { return achievable_; }

 private:
  Real achievable_;
};

struct GammaEnclosure {
  Interval value;      // contains Gamma(x+1)
  Interval log_value;  // contains ln Gamma(x+1); exp(log_value) overlaps value
  int shift_used;      // m: the enclosure was formed at x+m and divided down
  int stirling_terms;  // bracket depth n (lower truncation ends at k = 2n)
};

// Rigorous enclosure of Gamma(x+1), x > 0, with relative width <=
// target_rel_width.  Built solely from the two-sided Stirling bracket at
// x+m (m >= 0 chosen so x+m is large enough) and the functional equation
// Gamma(x+m+1) = Gamma(x+1) * prod_{j=1..m} (x+j); no external gamma is
// consulted.  Throws PrecisionError when the target is unreachable
// (target <= 2^(8-precision) or the shift cap m <= 64 is insufficient),
// std::domain_error for x <= 0.
GammaEnclosure gamma_enclosure(const Real& x, const Real& target_rel_width,
                               long precision_bits);

}  // namespace wgamma

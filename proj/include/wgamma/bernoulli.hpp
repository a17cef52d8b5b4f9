#pragma once

#include <mutex>
#include <vector>

#include "wgamma/rational.hpp"

namespace wgamma {

// Memoized table of Bernoulli numbers under the B_1 = -1/2 convention,
// generated by the defining recurrence
//     sum_{j=0}^{m} binomial(m+1, j) B_j = 0      (m >= 1),  B_0 = 1.
// Safe for concurrent readers.  Practical ceiling: n <= 512 (the table grows
// monotonically and entries beyond that are useless for the target x ranges).
class BernoulliTable {
 public:
  static BernoulliTable& instance();

  Rational get(unsigned n);
  unsigned max_index() const;

  BernoulliTable(const BernoulliTable&) = delete;
  BernoulliTable& operator=(const BernoulliTable&) = delete;

 private:
  BernoulliTable() = default;

  mutable std::mutex mu_;
  std::vector<Rational> entries_;
};

// B_n; memoized, so repeated calls are O(1).
Rational bernoulli(unsigned n);

}  // namespace wgamma

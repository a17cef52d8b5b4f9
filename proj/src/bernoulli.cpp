#include "wgamma/bernoulli.hpp"

namespace wgamma {

BernoulliTable& BernoulliTable::instance() {
  static BernoulliTable table;
  return table;
}

Rational BernoulliTable::get(unsigned n) {
  std::lock_guard<std::mutex> lock(mu_);
  if (entries_.empty()) entries_.emplace_back(1);  // B_0
  while (entries_.size() <= n) {
    unsigned m = static_cast<unsigned>(entries_.size());
    if (m > 1 && m % 2 == 1) {
      entries_.emplace_back(0);
      continue;
    }
    // B_m = -1/(m+1) * sum_{j=0}^{m-1} binomial(m+1, j) B_j
    Rational sum;
    mpz_class binom;
    for (unsigned j = 0; j < m; ++j) {
      if (entries_[j].is_zero()) continue;
      mpz_bin_uiui(binom.get_mpz_t(), m + 1, j);
      sum += Rational(binom, 1) * entries_[j];
    }
    entries_.push_back(sum / Rational(-(static_cast<long>(m) + 1)));
  }
  return entries_[n];
}

unsigned BernoulliTable::max_index() const {
  std::lock_guard<std::mutex> lock(mu_);
  return entries_.empty() ? 0 : static_cast<unsigned>(entries_.size() - 1);
}

Rational bernoulli(unsigned n) { return BernoulliTable::instance().get(n); }

}  // namespace wgamma

#pragma once

#include <cstdint>
#include <vector>

#include "franel/binomial.hpp"
#include "franel/franel_numbers.hpp"

namespace franel {

/**
 * Read-only state shared by the verification suites: a Franel table, a warmed
 * binomial cache and the central binomials C(2k, k). Everything is built in
 * the constructor and only exposed through const references, so one context
 * can serve any number of concurrent workers.
 */
class VerificationContext {
 public:
  // f_0..max_index by the recurrence route, binomial rows 0..binomial_rows.
  explicit VerificationContext(std::int64_t max_index, std::int64_t binomial_rows = 1024);
  explicit VerificationContext(FranelTable table, std::int64_t binomial_rows = 1024);

  const FranelTable& table() const { return table_; }
  const BinomialProvider& binomial() const { return binom_; }
  std::int64_t max_index() const { return table_.max_index(); }

  // f_n; throws UsageError when n is beyond the table.
  const BigInt& f(std::int64_t n) const;
  // C(2k, k); same range as f.
  const BigInt& central(std::int64_t k) const;

  BigInt choose(std::int64_t n, std::int64_t k) const { return binom_(n, k); }
  BigInt choose_generalized(std::int64_t x, std::int64_t k) const { return binom_.generalized(x, k); }

 private:
  FranelTable table_;
  BinomialProvider binom_;
  std::vector<BigInt> central_;
};

}  // namespace franel

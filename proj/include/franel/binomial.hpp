#pragma once

#include <cstdint>
#include <vector>

#include "franel/bigint.hpp"

namespace franel {

// C(n, k) for n >= 0; zero outside 0 <= k <= n.
BigInt binomial(std::int64_t n, std::int64_t k);

// x(x-1)...(x-k+1)/k! for any integer x. Throws UsageError for k < 0.
BigInt binomial_generalized(std::int64_t x, std::int64_t k);

/**
 * Binomial coefficients with a cache of whole rows.
 *
 * Rows up to `row_limit` are materialized on demand (each row is built with
 * the multiplicative recurrence, independently of its neighbours); anything
 * beyond the limit is computed directly and not stored.
 *
 * The non-const accessors may grow the cache. The const accessors never
 * mutate: they read a cached row when one exists and otherwise fall back to
 * direct computation. Sharing a provider between threads is therefore safe
 * as long as every thread only holds a const reference.
 */
class BinomialProvider {
 public:
  explicit BinomialProvider(std::int64_t row_limit = 1024);

  std::int64_t row_limit() const { return row_limit_; }

  BigInt operator()(std::int64_t n, std::int64_t k);
  BigInt operator()(std::int64_t n, std::int64_t k) const;

  // Integer (possibly negative) upper argument, via C(x, k) = (-1)^k C(k - x - 1, k).
  BigInt generalized(std::int64_t x, std::int64_t k);
  BigInt generalized(std::int64_t x, std::int64_t k) const;

  // Reference into a cached row. Requires has_row(n) and 0 <= k <= n.
  const BigInt& cached(std::int64_t n, std::int64_t k) const;

  bool has_row(std::int64_t n) const;

  // Materialize rows 0..max_row (clamped to the row limit).
  void warm(std::int64_t max_row);

  // Rows currently materialized, ascending.
  std::vector<std::int64_t> cached_rows() const;

  const std::vector<BigInt>& row(std::int64_t n);

 private:
  std::int64_t row_limit_;
  std::vector<std::vector<BigInt>> rows_;  // empty vector == not materialized
};

}  // namespace franel

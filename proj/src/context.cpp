#include "franel/context.hpp"

#include <string>

namespace franel {

VerificationContext::VerificationContext(std::int64_t max_index, std::int64_t binomial_rows)
    : VerificationContext(build_franel_table(max_index, Route::recurrence), binomial_rows) {}

VerificationContext::VerificationContext(FranelTable table, std::int64_t binomial_rows)
    : table_(std::move(table)), binom_(binomial_rows) {
  binom_.warm(binomial_rows);
  central_.reserve(table_.size());
  central_.emplace_back(1);
  // C(2k+2, k+1) = C(2k, k) * 2(2k+1) / (k+1)
  for (std::int64_t k = 0; k < table_.max_index(); ++k) {
    BigInt next = central_.back() * (2 * (2 * k + 1));
    mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), static_cast<unsigned long>(k + 1));
    central_.push_back(std::move(next));
  }
}

const BigInt& VerificationContext::f(std::int64_t n) const {
  if (n < 0 || n > table_.max_index())
    throw UsageError("context: f_" + std::to_string(n) + " is outside the prepared table (max " +
                     std::to_string(table_.max_index()) + ")");
  return table_[n];
}

const BigInt& VerificationContext::central(std::int64_t k) const {
  if (k < 0 || k > table_.max_index())
    throw UsageError("context: C(2k,k) for k=" + std::to_string(k) + " is outside the prepared range");
  return central_[static_cast<std::size_t>(k)];
}

}  // namespace franel

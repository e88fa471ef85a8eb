#include "franel/binomial.hpp"

#include <algorithm>
#include <string>

namespace franel {

std::string to_string(const Rational& v) { return v.get_str(); }

BigInt pow(const BigInt& base, std::uint64_t exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw UsageError("binomial: negative upper argument " + std::to_string(n));
  if (k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt binomial_generalized(std::int64_t x, std::int64_t k) {
  if (k < 0) throw UsageError("binomial_generalized: negative k " + std::to_string(k));
  if (x >= 0) return binomial(x, k);
  BigInt out = binomial(k - x - 1, k);
  if (k % 2 != 0) out = -out;
  return out;
}

BinomialProvider::BinomialProvider(std::int64_t row_limit) : row_limit_(row_limit) {
  if (row_limit < 0) throw UsageError("BinomialProvider: negative row limit");
}

bool BinomialProvider::has_row(std::int64_t n) const {
  return n >= 0 && n < static_cast<std::int64_t>(rows_.size()) && !rows_[n].empty();
}

const std::vector<BigInt>& BinomialProvider::row(std::int64_t n) {
  if (n < 0 || n > row_limit_) throw UsageError("BinomialProvider::row: row outside cache limit");
  if (static_cast<std::int64_t>(rows_.size()) <= n) rows_.resize(n + 1);
  auto& r = rows_[n];
  if (r.empty()) {
    r.resize(n + 1);
    r[0] = 1;
    // C(n, k+1) = C(n, k) (n - k) / (k + 1); the division is exact.
    for (std::int64_t k = 0; k < n / 2; ++k) {
      r[k + 1] = r[k] * (n - k);
      mpz_divexact_ui(r[k + 1].get_mpz_t(), r[k + 1].get_mpz_t(), static_cast<unsigned long>(k + 1));
    }
    for (std::int64_t k = n / 2 + 1; k <= n; ++k) r[k] = r[n - k];
  }
  return r;
}

void BinomialProvider::warm(std::int64_t max_row) {
  const std::int64_t top = std::min(max_row, row_limit_);
  for (std::int64_t n = 0; n <= top; ++n) row(n);
}

std::vector<std::int64_t> BinomialProvider::cached_rows() const {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 0; n < static_cast<std::int64_t>(rows_.size()); ++n)
    if (!rows_[n].empty()) out.push_back(n);
  return out;
}

const BigInt& BinomialProvider::cached(std::int64_t n, std::int64_t k) const {
  if (!has_row(n) || k < 0 || k > n) throw UsageError("BinomialProvider::cached: entry not cached");
  return rows_[n][k];
}

BigInt BinomialProvider::operator()(std::int64_t n, std::int64_t k) {
  if (n < 0) throw UsageError("binomial: negative upper argument " + std::to_string(n));
  if (k < 0 || k > n) return 0;
  if (n <= row_limit_) return row(n)[k];
  return binomial(n, k);
}

BigInt BinomialProvider::operator()(std::int64_t n, std::int64_t k) const {
  if (n < 0) throw UsageError("binomial: negative upper argument " + std::to_string(n));
  if (k < 0 || k > n) return 0;
  if (has_row(n)) return rows_[n][k];
  return binomial(n, k);
}

BigInt BinomialProvider::generalized(std::int64_t x, std::int64_t k) {
  if (k < 0) throw UsageError("binomial_generalized: negative k " + std::to_string(k));
  if (x >= 0) return (*this)(x, k);
  BigInt out = (*this)(k - x - 1, k);
  if (k % 2 != 0) out = -out;
  return out;
}

BigInt BinomialProvider::generalized(std::int64_t x, std::int64_t k) const {
  if (k < 0) throw UsageError("binomial_generalized: negative k " + std::to_string(k));
  if (x >= 0) return (*this)(x, k);
  BigInt out = (*this)(k - x - 1, k);
  if (k % 2 != 0) out = -out;
  return out;
}

}  // namespace franel

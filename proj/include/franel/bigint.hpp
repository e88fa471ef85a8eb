#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace franel {

// Exact signed integer. Every count, binomial and sum in the library lives here.
using BigInt = mpz_class;

// Always canonical: lowest terms, positive denominator.
using Rational = mpq_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const Rational& v);

// Base raised to a nonnegative exponent, exactly.
BigInt pow(const BigInt& base, std::uint64_t exponent);

/// Precondition violated by the caller (bad argument, unknown tag, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A value that must be exact turned out not to be; indicates a bug or corrupt input.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace franel

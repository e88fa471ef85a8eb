#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "franel/bigint.hpp"

namespace franel {

/// Raised when an inverse is requested for a value sharing a factor with the modulus.
class NotCoprimeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when residues of different moduli meet in one operation.
class ModulusMismatchError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A residue class: value always in [0, modulus), modulus >= 2 (or exactly 1,
// the trivial ring, which divisibility-by-n^2 statements need at n = 1).
class Residue {
 public:
  Residue(const BigInt& a, const BigInt& modulus);

  const BigInt& value() const { return value_; }
  const BigInt& modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  Residue& operator+=(const Residue& o);
  Residue& operator-=(const Residue& o);
  Residue& operator*=(const Residue& o);
  Residue operator-() const;

  friend Residue operator+(Residue a, const Residue& b) { return a += b; }
  friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
  friend Residue operator*(Residue a, const Residue& b) { return a *= b; }

  // Comparing residues of different moduli throws ModulusMismatchError.
  friend bool operator==(const Residue& a, const Residue& b);

  // Negative exponents go through the inverse.
  Residue pow(std::int64_t exponent) const;
  Residue inverse() const;

 private:
  void require_same_modulus(const Residue& o) const;

  BigInt value_;
  BigInt modulus_;
};

// Canonical representative of a mod m. Throws UsageError for m < 2.
Residue reduce(const BigInt& a, const BigInt& m);

// a^{-1} mod m by extended Euclid; NotCoprimeError when gcd(a, m) != 1.
Residue mod_inverse(const BigInt& a, const BigInt& m);

// num / den mod m.
Residue rational_residue(const BigInt& num, const BigInt& den, const BigInt& m);

bool is_prime(std::int64_t n);

// Euler's criterion. p must be an odd prime.
int legendre_symbol(const BigInt& a, std::int64_t p);

// Primes in [lo, hi] ascending by trial division. Requires lo >= 2; lo > hi gives {}.
std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi);

// p = x^2 + y^2 with x odd > 0 and y even > 0.
struct TwoSquares {
  std::int64_t p;
  std::int64_t x;
  std::int64_t y;
};

// Exhaustive search over odd x <= sqrt(p). Requires p prime, p = 1 mod 4.
TwoSquares two_squares_decompose(std::int64_t p);

}  // namespace franel

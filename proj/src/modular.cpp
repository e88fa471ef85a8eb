#include "franel/modular.hpp"

#include <cmath>
#include <string>

namespace franel {

namespace {

BigInt canonical(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

Residue::Residue(const BigInt& a, const BigInt& modulus) : modulus_(modulus) {
  if (modulus < 1) throw UsageError("Residue: modulus must be positive, got " + to_string(modulus));
  value_ = canonical(a, modulus_);
}

void Residue::require_same_modulus(const Residue& o) const {
  if (modulus_ != o.modulus_)
    throw ModulusMismatchError("residue modulus mismatch: " + to_string(modulus_) + " vs " +
                               to_string(o.modulus_));
}

Residue& Residue::operator+=(const Residue& o) {
  require_same_modulus(o);
  value_ += o.value_;
  if (value_ >= modulus_) value_ -= modulus_;
  return *this;
}

Residue& Residue::operator-=(const Residue& o) {
  require_same_modulus(o);
  value_ -= o.value_;
  if (value_ < 0) value_ += modulus_;
  return *this;
}

Residue& Residue::operator*=(const Residue& o) {
  require_same_modulus(o);
  value_ *= o.value_;
  mpz_mod(value_.get_mpz_t(), value_.get_mpz_t(), modulus_.get_mpz_t());
  return *this;
}

Residue Residue::operator-() const { return Residue(-value_, modulus_); }

bool operator==(const Residue& a, const Residue& b) {
  a.require_same_modulus(b);
  return a.value_ == b.value_;
}

Residue Residue::pow(std::int64_t exponent) const {
  const Residue base = exponent < 0 ? inverse() : *this;
  const auto e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  Residue out = base;
  mpz_powm_ui(out.value_.get_mpz_t(), base.value_.get_mpz_t(), e, modulus_.get_mpz_t());
  return out;
}

Residue Residue::inverse() const { return mod_inverse(value_, modulus_); }

Residue reduce(const BigInt& a, const BigInt& m) {
  if (m < 2) throw UsageError("reduce: modulus must be >= 2, got " + to_string(m));
  return Residue(a, m);
}

Residue mod_inverse(const BigInt& a, const BigInt& m) {
  if (m < 2) throw UsageError("mod_inverse: modulus must be >= 2, got " + to_string(m));
  // Extended Euclid on (a mod m, m), tracking the coefficient of a.
  BigInt old_r = canonical(a, m), r = m;
  BigInt old_s = 1, s = 0;
  while (r != 0) {
    const BigInt q = old_r / r;
    BigInt t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1)
    throw NotCoprimeError("mod_inverse: " + to_string(a) + " is not invertible modulo " + to_string(m));
  return Residue(old_s, m);
}

Residue rational_residue(const BigInt& num, const BigInt& den, const BigInt& m) {
  return reduce(num, m) * mod_inverse(den, m);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

int legendre_symbol(const BigInt& a, std::int64_t p) {
  if (p < 3 || !is_prime(p)) throw UsageError("legendre_symbol: modulus must be an odd prime, got " + std::to_string(p));
  const Residue e = reduce(a, p).pow((p - 1) / 2);
  if (e.is_zero()) return 0;
  return e.value() == 1 ? 1 : -1;
}

std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi) {
  if (lo < 2) throw UsageError("primes_in_range: lower bound must be >= 2");
  std::vector<std::int64_t> out;
  for (std::int64_t n = lo; n <= hi; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

TwoSquares two_squares_decompose(std::int64_t p) {
  if (!is_prime(p) || p % 4 != 1)
    throw UsageError("two_squares_decompose: " + std::to_string(p) + " is not a prime = 1 mod 4");
  for (std::int64_t x = 1; x * x < p; x += 2) {
    const std::int64_t rest = p - x * x;
    auto y = static_cast<std::int64_t>(std::sqrt(static_cast<double>(rest)));
    while (y * y > rest) --y;
    while ((y + 1) * (y + 1) <= rest) ++y;
    if (y * y == rest && y > 0 && y % 2 == 0) return {p, x, y};
  }
  throw InconsistencyError("two_squares_decompose: no decomposition found for " + std::to_string(p));
}

}  // namespace franel

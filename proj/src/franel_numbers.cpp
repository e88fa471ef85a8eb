#include "franel/franel_numbers.hpp"

#include <string>

namespace franel {

std::string_view route_name(Route r) {
  switch (r) {
    case Route::direct: return "direct";
    case Route::strehl: return "strehl";
    case Route::recurrence: return "recurrence";
    case Route::sun_expansion: return "sun-expansion";
  }
  return "?";
}

std::optional<Route> parse_route(std::string_view name) {
  for (Route r : kAllRoutes)
    if (route_name(r) == name) return r;
  return std::nullopt;
}

namespace {

void require_index(std::int64_t n) {
  if (n < 0) throw UsageError("franel: negative index " + std::to_string(n));
}

template <class Binom>
BigInt by_direct(std::int64_t n, Binom& binom) {
  BigInt sum = 0;
  BigInt cube;
  for (std::int64_t k = 0; k <= n; ++k) {
    const BigInt c = binom(n, k);
    cube = c * c * c;
    sum += cube;
  }
  return sum;
}

template <class Binom>
BigInt by_strehl(std::int64_t n, Binom& binom) {
  BigInt sum = 0;
  // C(2k, n) vanishes for 2k < n.
  for (std::int64_t k = (n + 1) / 2; k <= n; ++k) {
    const BigInt c = binom(n, k);
    sum += c * c * binom(2 * k, n);
  }
  return sum;
}

template <class Binom>
BigInt by_sun_expansion(std::int64_t n, Binom& binom) {
  BigInt sum = 0;
  BigInt weight = 1;  // (-4)^{n-k}, walking k downward
  for (std::int64_t k = n; k >= 0; --k) {
    sum += binom(n + 2 * k, 3 * k) * binom(3 * k, k) * binom(2 * k, k) * weight;
    weight *= -4;
  }
  return sum;
}

std::vector<BigInt> by_recurrence(std::int64_t max_index) {
  std::vector<BigInt> f;
  f.reserve(static_cast<std::size_t>(max_index) + 1);
  f.emplace_back(1);
  if (max_index >= 1) f.emplace_back(2);
  for (std::int64_t n = 1; n < max_index; ++n) f.push_back(franel_recurrence_step(n, f[n], f[n - 1]));
  return f;
}

template <class Binom>
BigInt franel_impl(std::int64_t n, Route route, Binom& binom) {
  require_index(n);
  switch (route) {
    case Route::direct: return by_direct(n, binom);
    case Route::strehl: return by_strehl(n, binom);
    case Route::recurrence: return by_recurrence(n).back();
    case Route::sun_expansion: return by_sun_expansion(n, binom);
  }
  throw UsageError("franel: unknown route");
}

template <class Binom>
std::pair<BigInt, BigInt> macmahon_impl(std::int64_t n, const BigInt& x, Binom& binom) {
  require_index(n);
  BigInt lhs = 0;
  BigInt x_pow = 1;
  for (std::int64_t k = 0; k <= n; ++k) {
    const BigInt c = binom(n, k);
    lhs += c * c * c * x_pow;
    x_pow *= x;
  }
  // mpz_pow_ui gives 0^0 = 1, which is the convention the identity needs at x = -1.
  const BigInt one_plus_x = x + 1;
  BigInt rhs = 0;
  for (std::int64_t k = 0; 2 * k <= n; ++k) {
    rhs += binom(n + k, 3 * k) * binom(3 * k, 2 * k) * binom(2 * k, k) * pow(x, k) *
           pow(one_plus_x, static_cast<std::uint64_t>(n - 2 * k));
  }
  return {lhs, rhs};
}

}  // namespace

BigInt franel_recurrence_step(std::int64_t n, const BigInt& f_n, const BigInt& f_prev) {
  if (n < 1) throw UsageError("franel_recurrence_step: n must be >= 1");
  const BigInt nn = BigInt(n) * n;
  BigInt num = (7 * nn + 7 * n + 2) * f_n + 8 * nn * f_prev;
  const BigInt den = BigInt(n + 1) * (n + 1);
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw InconsistencyError("franel recurrence: inexact division by (n+1)^2 at n=" + std::to_string(n));
  mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return num;
}

BigInt franel(std::int64_t n, Route route, BinomialProvider& binom) { return franel_impl(n, route, binom); }

BigInt franel(std::int64_t n, Route route, const BinomialProvider& binom) {
  return franel_impl(n, route, binom);
}

BigInt franel(std::int64_t n, Route route) {
  BinomialProvider binom;
  return franel(n, route, binom);
}

FranelTable::FranelTable(std::vector<BigInt> values, Route route)
    : values_(std::move(values)), route_(route) {
  if (values_.empty()) throw UsageError("FranelTable: empty table");
}

FranelTable build_franel_table(std::int64_t max_index, Route route, BinomialProvider& binom) {
  require_index(max_index);
  if (route == Route::recurrence) return FranelTable(by_recurrence(max_index), route);
  std::vector<BigInt> values;
  values.reserve(static_cast<std::size_t>(max_index) + 1);
  for (std::int64_t n = 0; n <= max_index; ++n) values.push_back(franel(n, route, binom));
  return FranelTable(std::move(values), route);
}

FranelTable build_franel_table(std::int64_t max_index, Route route) {
  BinomialProvider binom;
  return build_franel_table(max_index, route, binom);
}

std::pair<BigInt, BigInt> macmahon_sides(std::int64_t n, const BigInt& x, BinomialProvider& binom) {
  return macmahon_impl(n, x, binom);
}

std::pair<BigInt, BigInt> macmahon_sides(std::int64_t n, const BigInt& x, const BinomialProvider& binom) {
  return macmahon_impl(n, x, binom);
}

std::pair<BigInt, BigInt> macmahon_sides(std::int64_t n, const BigInt& x) {
  BinomialProvider binom;
  return macmahon_sides(n, x, binom);
}

std::pair<Rational, Rational> partial_fraction_sides(std::int64_t n) {
  require_index(n);
  Rational lhs = 0;
  for (std::int64_t k = 0; k <= n; ++k) {
    // 1 / (1/2 + k) = 2 / (2k + 1)
    Rational term(binomial(n, k) * 2, BigInt(2 * k + 1));
    term.canonicalize();
    if (k % 2 == 0) lhs += term;
    else lhs -= term;
  }
  BigInt factorial;
  mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(n));
  Rational rhs = factorial;
  for (std::int64_t i = 0; i <= n; ++i) {
    Rational factor(BigInt(2 * i + 1), BigInt(2));
    factor.canonicalize();
    rhs /= factor;
  }
  return {lhs, rhs};
}

}  // namespace franel

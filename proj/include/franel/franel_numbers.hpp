#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "franel/bigint.hpp"
#include "franel/binomial.hpp"

namespace franel {

// Independent ways of computing f_n = sum_k C(n,k)^3.
enum class Route {
  direct,         // sum of cubes of a binomial row
  strehl,         // sum_k C(n,k)^2 C(2k,n)
  recurrence,     // (n+1)^2 f_{n+1} = (7n^2+7n+2) f_n + 8n^2 f_{n-1}
  sun_expansion,  // sum_k C(n+2k,3k) C(3k,k) C(2k,k) (-4)^{n-k}
};

inline constexpr Route kAllRoutes[] = {Route::direct, Route::strehl, Route::recurrence,
                                       Route::sun_expansion};

std::string_view route_name(Route r);
std::optional<Route> parse_route(std::string_view name);

BigInt franel(std::int64_t n, Route route);
BigInt franel(std::int64_t n, Route route, BinomialProvider& binom);
BigInt franel(std::int64_t n, Route route, const BinomialProvider& binom);

// Immutable after construction; safe to share across threads.
class FranelTable {
 public:
  FranelTable(std::vector<BigInt> values, Route route);

  Route route() const { return route_; }
  std::int64_t max_index() const { return static_cast<std::int64_t>(values_.size()) - 1; }
  std::size_t size() const { return values_.size(); }
  const BigInt& operator[](std::int64_t n) const { return values_.at(static_cast<std::size_t>(n)); }
  std::span<const BigInt> values() const { return values_; }

  friend bool operator==(const FranelTable& a, const FranelTable& b) { return a.values_ == b.values_; }

 private:
  std::vector<BigInt> values_;
  Route route_;
};

// f_0..f_N. The recurrence route divides exactly by (n+1)^2 and throws
// InconsistencyError if a remainder ever appears.
FranelTable build_franel_table(std::int64_t max_index, Route route);
FranelTable build_franel_table(std::int64_t max_index, Route route, BinomialProvider& binom);

// One recurrence step: f_{n+1} from f_n and f_{n-1}, n >= 1.
BigInt franel_recurrence_step(std::int64_t n, const BigInt& f_n, const BigInt& f_prev);

// Both sides of MacMahon's identity at an integer point x:
//   sum_k C(n,k)^3 x^k  and  sum_k C(n+k,3k) C(3k,2k) C(2k,k) x^k (1+x)^{n-2k}.
// 0^0 = 1 throughout.
std::pair<BigInt, BigInt> macmahon_sides(std::int64_t n, const BigInt& x);
std::pair<BigInt, BigInt> macmahon_sides(std::int64_t n, const BigInt& x, BinomialProvider& binom);
std::pair<BigInt, BigInt> macmahon_sides(std::int64_t n, const BigInt& x, const BinomialProvider& binom);

// sum_k (-1)^k C(n,k) / (1/2 + k)  and  n! / ((1/2)(3/2)...(1/2 + n)).
std::pair<Rational, Rational> partial_fraction_sides(std::int64_t n);

}  // namespace franel

#include "franel/identities.hpp"

#include <algorithm>
#include <string>

namespace franel {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

BigInt neg_pow(std::int64_t base, std::int64_t e) { return pow(BigInt(base), static_cast<std::uint64_t>(e)); }

BigInt direct_franel(std::int64_t n, const VerificationContext& ctx) {
  return franel(n, Route::direct, ctx.binomial());
}

}  // namespace

IdentityReport check_sun_expansion(std::int64_t n, const VerificationContext& ctx) {
  require(n >= 0, "sun-expansion: n must be >= 0");
  BigInt sum = 0;
  for (std::int64_t k = 0; k <= n; ++k)
    sum += ctx.choose(n + 2 * k, 3 * k) * ctx.choose(3 * k, k) * ctx.choose(2 * k, k) * neg_pow(-4, n - k);
  return IdentityReport::make("sun-expansion", {{"n", n}}, direct_franel(n, ctx), sum);
}

BigInt induction_lhs(std::int64_t n, std::int64_t k, const VerificationContext& ctx) {
  BigInt lhs = 0;
  for (std::int64_t m = k; m <= n - 1; ++m)
    lhs += (3 * m + 1) * neg_pow(-16, n - m - 1) * ctx.choose(2 * m, m) * ctx.choose(m + 2 * k, 3 * k) *
           neg_pow(-4, m - k);
  return lhs;
}

IdentityReport check_induction_identity(std::int64_t n, std::int64_t k, const VerificationContext& ctx) {
  require(0 <= k && k <= n, "induction: need 0 <= k <= n");
  const BigInt lhs = induction_lhs(n, k, ctx) * (8 * (2 * k + 1));
  const BigInt rhs = ctx.choose(2 * n, n) * ctx.choose(n + 2 * k, 3 * k) * (n * (k - n)) * neg_pow(-4, n - k);
  return IdentityReport::make("induction", {{"n", n}, {"k", k}}, lhs, rhs, "both sides scaled by 8(2k+1)");
}

IdentityReport check_induction_step(std::int64_t n, std::int64_t k, const VerificationContext& ctx) {
  require(0 <= k && k <= n, "induction-step: need 0 <= k <= n");
  const BigInt lhs = induction_lhs(n + 1, k, ctx) + 16 * induction_lhs(n, k, ctx);
  const BigInt rhs = (3 * n + 1) * ctx.choose(2 * n, n) * ctx.choose(n + 2 * k, 3 * k) * neg_pow(-4, n - k);
  return IdentityReport::make("induction-step", {{"n", n}, {"k", k}}, lhs, rhs);
}

IdentityReport check_summation_lemma(std::int64_t n, std::int64_t k, const VerificationContext& ctx) {
  require(0 <= k && k <= n, "summation-lemma: need 0 <= k <= n");
  BigInt lhs = 0;
  for (std::int64_t m = k; m <= n; ++m) {
    const BigInt t = ctx.choose(n, m) * ctx.choose(m + 2 * k, 3 * k);
    if ((m - k) % 2 == 0) lhs += t;
    else lhs -= t;
  }
  BigInt rhs = ctx.choose(2 * k, n - k);
  if ((n - k) % 2 != 0) rhs = -rhs;
  return IdentityReport::make("summation-lemma", {{"n", n}, {"k", k}}, lhs, rhs,
                              n > 3 * k ? "right side vanishes (n > 3k)" : "");
}

IdentityReport check_integrality(std::int64_t n, const VerificationContext& ctx) {
  require(n >= 2, "integrality: n must be >= 2");
  BigInt quotient_sum = 0;
  BigInt r;
  for (std::int64_t k = 0; k < n; ++k) {
    const BigInt c3 = ctx.choose(3 * k, k);
    // (a) C(3k,k)/(2k+1) = C(3k,k) - 2C(3k,k-1)
    const BigInt odd = 2 * k + 1;
    mpz_fdiv_r(r.get_mpz_t(), c3.get_mpz_t(), odd.get_mpz_t());
    if (r != 0)
      return IdentityReport::make("integrality", {{"n", n}, {"k", k}}, r, 0, "C(3k,k) mod (2k+1)");
    const BigInt a_quot = c3 / odd;
    const BigInt a_alt = c3 - 2 * ctx.choose(3 * k, k - 1);
    if (a_quot != a_alt)
      return IdentityReport::make("integrality", {{"n", n}, {"k", k}}, a_quot, a_alt,
                                  "C(3k,k)/(2k+1) vs C(3k,k) - 2C(3k,k-1)");
    // (b) C(2k,k)(-4)^{n-k}/8
    const BigInt b_num = ctx.choose(2 * k, k) * neg_pow(-4, n - k);
    mpz_fdiv_r_ui(r.get_mpz_t(), b_num.get_mpz_t(), 8);
    if (r != 0)
      return IdentityReport::make("integrality", {{"n", n}, {"k", k}}, r, 0, "C(2k,k)(-4)^{n-k} mod 8");
    // (c) term of the quotient sum
    const BigInt num = ctx.choose(n + 2 * k, 3 * k) * c3 * b_num * (k - n);
    const BigInt den = 8 * odd;
    mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0)
      return IdentityReport::make("integrality", {{"n", n}, {"k", k}}, r, 0, "quotient-sum term mod 8(2k+1)");
    quotient_sum += num / den;
  }
  // The quotient sum times n C(2n,n) must reproduce the theorem-1 sum.
  BigInt s = 0;
  for (std::int64_t k = 0; k < n; ++k)
    s += (3 * k + 1) * neg_pow(-16, n - k - 1) * ctx.choose(2 * k, k) * ctx.f(k);
  return IdentityReport::make("integrality", {{"n", n}}, s, quotient_sum * n * ctx.choose(2 * n, n),
                              "sum vs n C(2n,n) * integral quotient sum");
}

IdentityReport check_recurrence(std::int64_t max_n, const VerificationContext& ctx) {
  require(max_n >= 2, "recurrence: N must be >= 2");
  std::vector<BigInt> f;
  f.reserve(static_cast<std::size_t>(max_n) + 1);
  for (std::int64_t n = 0; n <= max_n; ++n) f.push_back(direct_franel(n, ctx));
  IdentityReport last;
  for (std::int64_t n = 1; n <= max_n - 1; ++n) {
    const BigInt nn = BigInt(n) * n;
    last = IdentityReport::make("recurrence", {{"N", max_n}, {"n", n}}, BigInt(n + 1) * (n + 1) * f[n + 1],
                                (7 * nn + 7 * n + 2) * f[n] + 8 * nn * f[n - 1]);
    if (!last.pass) break;
  }
  return last;
}

IdentityReport check_recurrence_step(std::int64_t n, const VerificationContext& ctx) {
  require(n >= 1, "recurrence: step index must be >= 1");
  const BigInt nn = BigInt(n) * n;
  return IdentityReport::make("recurrence", {{"n", n}}, BigInt(n + 1) * (n + 1) * direct_franel(n + 1, ctx),
                              (7 * nn + 7 * n + 2) * direct_franel(n, ctx) + 8 * nn * direct_franel(n - 1, ctx));
}

IdentityReport check_strehl(std::int64_t n, const VerificationContext& ctx) {
  require(n >= 0, "strehl: n must be >= 0");
  BigInt sum = 0;
  for (std::int64_t k = 0; k <= n; ++k) {
    const BigInt c = ctx.choose(n, k);
    sum += c * c * ctx.choose(2 * k, n);
  }
  return IdentityReport::make("strehl", {{"n", n}}, sum, direct_franel(n, ctx));
}

IdentityReport check_macmahon(std::int64_t n, const BigInt& x, const VerificationContext& ctx) {
  require(n >= 0, "macmahon: n must be >= 0");
  auto [lhs, rhs] = macmahon_sides(n, x, ctx.binomial());
  return IdentityReport::make("macmahon", {{"n", n}, {"x", x.get_si()}}, std::move(lhs), std::move(rhs));
}

IdentityReport check_partial_fraction(std::int64_t n) {
  require(n >= 0, "partial-fraction: n must be >= 0");
  const auto [lhs, rhs] = partial_fraction_sides(n);
  // a/b == c/d  <=>  ad == cb
  return IdentityReport::make("partial-fraction", {{"n", n}}, lhs.get_num() * rhs.get_den(),
                              rhs.get_num() * lhs.get_den(),
                              "cross-multiplied; sides " + to_string(lhs) + " and " + to_string(rhs));
}

IdentityReport check_route_agreement(std::int64_t n, const VerificationContext& ctx) {
  require(n >= 0, "franel-routes: n must be >= 0");
  const BigInt reference = direct_franel(n, ctx);
  // The recurrence route is read from the context table, which was built by that route.
  const bool table_is_recurrence = ctx.table().route() == Route::recurrence && n <= ctx.max_index();
  for (Route r : kAllRoutes) {
    if (r == Route::direct) continue;
    const BigInt v = r == Route::recurrence && table_is_recurrence ? ctx.f(n) : franel(n, r, ctx.binomial());
    if (v != reference)
      return IdentityReport::make("franel-routes", {{"n", n}}, reference, v,
                                  "direct vs " + std::string(route_name(r)));
  }
  return IdentityReport::make("franel-routes", {{"n", n}}, reference, reference, "all four routes agree");
}

std::vector<IdentityReport> check_final3_symmetry(std::int64_t p, const VerificationContext& ctx) {
  require(is_prime(p) && p % 4 == 3, "final3-symmetry: p must be a prime = 3 mod 4");
  const std::int64_t h = (p - 1) / 2;
  auto term = [&](std::int64_t k) {
    BigInt t = ctx.choose(h, k) * ctx.choose(3 * k, k) * ctx.choose(3 * h - 3 * k, h - k);
    return k % 2 == 0 ? t : BigInt(-t);
  };
  std::vector<IdentityReport> out;
  for (std::int64_t k = 0; 2 * k <= h; ++k)
    out.push_back(IdentityReport::make("final3-symmetry", {{"p", p}, {"k", k}}, term(k), -term(h - k)));
  return out;
}

bool is_identity_id(std::string_view id) {
  for (std::string_view known : {"sun-expansion", "induction", "induction-step", "summation-lemma", "integrality",
                                 "recurrence", "strehl", "macmahon", "partial-fraction", "franel-routes"})
    if (id == known) return true;
  return false;
}

std::vector<IdentityReport> identity_reports(std::string_view id, std::int64_t n, const SweepSpec& spec,
                                             const VerificationContext& ctx) {
  std::vector<IdentityReport> out;
  auto k_bounds = [&](std::int64_t hi) {
    std::int64_t lo = 0;
    if (spec.k_range) {
      lo = std::max<std::int64_t>(lo, spec.k_range->first);
      hi = std::min(hi, spec.k_range->second);
    }
    return std::pair{lo, hi};
  };
  if (id == "sun-expansion") out.push_back(check_sun_expansion(n, ctx));
  else if (id == "strehl") out.push_back(check_strehl(n, ctx));
  else if (id == "integrality") out.push_back(check_integrality(n, ctx));
  else if (id == "recurrence") out.push_back(check_recurrence_step(n - 1, ctx));
  else if (id == "partial-fraction") out.push_back(check_partial_fraction(n));
  else if (id == "franel-routes") out.push_back(check_route_agreement(n, ctx));
  else if (id == "macmahon") {
    for (const BigInt& x : spec.eval_points) out.push_back(check_macmahon(n, x, ctx));
  } else if (id == "induction" || id == "induction-step" || id == "summation-lemma") {
    const auto [lo, hi] = k_bounds(n);
    for (std::int64_t k = lo; k <= hi; ++k) {
      if (id == "induction") out.push_back(check_induction_identity(n, k, ctx));
      else if (id == "induction-step") out.push_back(check_induction_step(n, k, ctx));
      else out.push_back(check_summation_lemma(n, k, ctx));
    }
  } else {
    throw UsageError("unknown identity id: " + std::string(id));
  }
  return out;
}

IdentitySweepResult sweep_identity(std::string_view id, const SweepSpec& spec, const VerificationContext& ctx) {
  if (!is_identity_id(id)) throw UsageError("unknown identity id: " + std::string(id));
  if (spec.n_lo > spec.n_hi) throw UsageError("sweep: empty n range");
  IdentitySweepResult result{std::string(id), 0, std::nullopt};
  for (std::int64_t n = spec.n_lo; n <= spec.n_hi; ++n) {
    for (auto& r : identity_reports(id, n, spec, ctx)) {
      ++result.checked;
      if (!r.pass) {
        result.first_failure = std::move(r);
        return result;
      }
    }
  }
  return result;
}

}  // namespace franel

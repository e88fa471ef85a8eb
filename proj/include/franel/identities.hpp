#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "franel/context.hpp"
#include "franel/report.hpp"

namespace franel {

// Exact verification of the identities the supercongruence proofs rest on.
// Every check needs f_n (or binomials) up to its parameter; the context must
// cover that range. Rational factors are cleared by cross-multiplication so
// each comparison is an integer equality.

// f_n = sum_k C(n+2k,3k) C(3k,k) C(2k,k) (-4)^{n-k}, against the direct cube sum.
IdentityReport check_sun_expansion(std::int64_t n, const VerificationContext& ctx);

// sum_{m=k}^{n-1} (3m+1)(-16)^{n-m-1} C(2m,m) C(m+2k,3k) (-4)^{m-k}
//   = C(2n,n) C(n+2k,3k) n(k-n)(-4)^{n-k} / (8(2k+1)),
// compared as 8(2k+1)*LHS against the numerator.
IdentityReport check_induction_identity(std::int64_t n, std::int64_t k, const VerificationContext& ctx);

// Left side of the identity above, uncleared.
BigInt induction_lhs(std::int64_t n, std::int64_t k, const VerificationContext& ctx);

// The inductive step n -> n+1:
//   LHS(n+1,k) - (-16) LHS(n,k) = (3n+1) C(2n,n) C(n+2k,3k) (-4)^{n-k}.
IdentityReport check_induction_step(std::int64_t n, std::int64_t k, const VerificationContext& ctx);

// sum_{m=k}^{n} C(n,m) C(m+2k,3k) (-1)^{m-k} = C(2k,n-k) (-1)^{n-k}.
IdentityReport check_summation_lemma(std::int64_t n, std::int64_t k, const VerificationContext& ctx);

// For every 0 <= k < n: C(3k,k)/(2k+1) = C(3k,k) - 2C(3k,k-1) is integral,
// C(2k,k)(-4)^{n-k}/8 is integral, and the quotient sum
//   sum_k C(n+2k,3k) C(3k,k) C(2k,k) (k-n)(-4)^{n-k} / (8(2k+1))
// is an integer whose product with n C(2n,n) is the theorem-1 sum.
// On a failed sub-check the report carries the offending k and remainder.
IdentityReport check_integrality(std::int64_t n, const VerificationContext& ctx);

// (n+1)^2 f_{n+1} = (7n^2+7n+2) f_n + 8n^2 f_{n-1} for 1 <= n <= max_n - 1,
// with f from the direct route. Reports the first failing step, else the last.
IdentityReport check_recurrence(std::int64_t max_n, const VerificationContext& ctx);

// The single step of the recurrence producing f_{n+1}, n >= 1.
IdentityReport check_recurrence_step(std::int64_t n, const VerificationContext& ctx);

// sum_k C(n,k)^2 C(2k,n) = f_n (direct).
IdentityReport check_strehl(std::int64_t n, const VerificationContext& ctx);

// Both sides of MacMahon's identity at x.
IdentityReport check_macmahon(std::int64_t n, const BigInt& x, const VerificationContext& ctx);

// Partial-fraction identity at x = 1/2, compared as cross-multiplied numerators.
IdentityReport check_partial_fraction(std::int64_t n);

// Four-route agreement at n; lhs is the direct value, rhs the first disagreeing route (or direct).
IdentityReport check_route_agreement(std::int64_t n, const VerificationContext& ctx);

// Pairwise cancellation t_k + t_{h-k} = 0 of
//   t_k = (-1)^k C(h,k) C(3k,k) C(3h-3k, h-k),  h = (p-1)/2 odd,
// which is why the mod-p sum vanishes for p = 3 mod 4. One report per k <= h/2.
std::vector<IdentityReport> check_final3_symmetry(std::int64_t p, const VerificationContext& ctx);

struct SweepSpec {
  std::int64_t n_lo = 0;
  std::int64_t n_hi = 0;
  std::optional<std::pair<std::int64_t, std::int64_t>> k_range;  // default: all admissible k
  std::vector<BigInt> eval_points;                               // MacMahon evaluation points
};

struct IdentitySweepResult {
  std::string id;
  std::int64_t checked = 0;
  std::optional<IdentityReport> first_failure;

  bool pass() const { return !first_failure.has_value(); }
};

// Identity ids: sun-expansion, induction, induction-step, summation-lemma, integrality,
// recurrence, strehl, macmahon, partial-fraction, franel-routes.
bool is_identity_id(std::string_view id);

// All reports of one identity at one n (every admissible k / evaluation point).
// For "recurrence" the parameter is the largest index reached: the step n-1 -> n.
std::vector<IdentityReport> identity_reports(std::string_view id, std::int64_t n, const SweepSpec& spec,
                                             const VerificationContext& ctx);

// Runs an identity over a sweep, stopping at the first counterexample.
IdentitySweepResult sweep_identity(std::string_view id, const SweepSpec& spec, const VerificationContext& ctx);

}  // namespace franel

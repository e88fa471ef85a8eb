#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "franel/context.hpp"
#include "franel/report.hpp"

namespace franel {

// sum_{k<n} (3k+1)(-16)^{n-k-1} C(2k,k) f_k, exactly.
BigInt theorem1_sum(std::int64_t n, const VerificationContext& ctx);

// n C(2n,n) divides theorem1_sum(n); n >= 2. The witness is the quotient.
CongruenceReport check_theorem1(std::int64_t n, const VerificationContext& ctx);

// sum_{k<p} (3k+1) C(2k,k) f_k / (-16)^k = p (-1)^{(p-1)/2} mod p^3.
// Requires p prime; p = 2 surfaces as NotCoprimeError from the inverse of -16.
CongruenceReport check_theorem2(std::int64_t p, const VerificationContext& ctx);

// sum_{k<p} C(2k,k) f_k / (-16)^k = 0 mod p, for primes p = 3 mod 4.
CongruenceReport check_theorem3(std::int64_t p, const VerificationContext& ctx);

// sum_{k<p} weight(k) C(2k,k) f_k (-16)^{-k} mod m, accumulated term by term.
// weight is (3k+1) when `weighted`, else 1.
Residue franel_series_mod(std::int64_t p, const BigInt& m, bool weighted, const VerificationContext& ctx);

enum class Auxiliary {
  babbage,         // C(2p-1,p-1) = 1 mod p^2
  morley,          // C(p-1,(p-1)/2) = (-1)^{(p-1)/2} 4^{p-1} mod p^3, p > 3
  jarvis_verrill,  // f_n = (-8)^n f_{p-1-n} mod p
  multinomial,     // C(p+2k,3k) C(3k,k) = (-1)^{k-1} p/k or 2p/k mod p^2
  half_binom,      // the k = (p-1)/2 term = -16^{p-1} mod p^2
  central_pmod,    // C(2k,k) 4^{-k} = (-1)^k C((p-1)/2,k) mod p
  fermat_square,   // 2^{p-1} + 8^{1-p} - 4^{1-p} = 1 mod p^2
  final_reflect,   // C(2k,(p-1)/2-k) = (-1)^{(p-1)/2-k} C(3(p-1)/2-3k,(p-1)/2-k) mod p
};

inline constexpr Auxiliary kAllAuxiliaries[] = {
    Auxiliary::babbage,      Auxiliary::morley,       Auxiliary::jarvis_verrill, Auxiliary::multinomial,
    Auxiliary::half_binom,   Auxiliary::central_pmod, Auxiliary::fermat_square,  Auxiliary::final_reflect,
};

std::string_view auxiliary_name(Auxiliary id);
std::optional<Auxiliary> parse_auxiliary(std::string_view name);

// Smallest prime the statement is claimed for (5 for Morley, 3 otherwise).
std::int64_t auxiliary_min_prime(Auxiliary id);

// One report per inner parameter, or a single report for parameter-free statements.
std::vector<CongruenceReport> check_auxiliary(Auxiliary id, std::int64_t p, const VerificationContext& ctx);

// Every intermediate congruence of the two proofs, evaluated at p:
//   S/p against each displayed reduction of it (mod p^3 for the exact rewrite,
//   mod p^2 for the rest), the mod-p chain for the unweighted sum, and the
//   vanishing of C(2k,k) mod p for (p-1)/2 < k < p.
std::vector<CongruenceReport> check_reduction_chain(std::int64_t p, const VerificationContext& ctx);

}  // namespace franel

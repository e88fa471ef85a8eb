#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "franel/context.hpp"
#include "franel/modular.hpp"
#include "franel/report.hpp"

namespace franel {

// p (-1)^{(p-1)/2} mod p^2 for the weighted series; p > 3.
CongruenceReport check_conjecture1(std::int64_t p, const VerificationContext& ctx);

// The p^3 residue of the theorem-2 series, reduced mod p^2, against the
// conjecture-1 residue computed directly mod p^2.
CongruenceReport check_conjecture1_agreement(std::int64_t p, const VerificationContext& ctx);

enum class Conjecture2Case {
  three_mod_four,          // target 0
  one_mod_twelve_six_y,    // 6 | y: 4x^2 - 2p
  one_mod_twelve_six_x3,   // 6 | x - 3: 2p - 4x^2
  five_mod_twelve,         // 4 (xy/3) xy
};

std::string_view conjecture2_case_name(Conjecture2Case c);

struct Conjecture2Target {
  Conjecture2Case which;
  BigInt target;                      // unreduced
  std::optional<TwoSquares> squares;  // absent for p = 3 mod 4
};

// Case split and target for an odd prime. Throws InconsistencyError if the
// p = 1 mod 12 sub-case predicates do not select exactly one case, or if 3 | xy
// when p = 5 mod 12.
Conjecture2Target conjecture2_target(std::int64_t p);

CongruenceReport check_conjecture2(std::int64_t p, const VerificationContext& ctx);

// Weight a k + b, geometric base c.
struct FamilyTriple {
  std::int64_t a;
  std::int64_t b;
  std::int64_t c;

  friend bool operator==(const FamilyTriple&, const FamilyTriple&) = default;
};

inline constexpr std::array<FamilyTriple, 7> kFamilyNew1 = {{
    {9, 4, 5}, {5, 2, 16}, {9, 2, 50}, {5, 1, 96}, {6, 1, 320}, {90, 13, 896}, {102, 11, 10400},
}};

inline constexpr std::array<FamilyTriple, 5> kFamilyNew2 = {{
    {15, 4, -49}, {9, 2, -112}, {99, 17, -400}, {855, 109, -2704}, {585, 58, -24304},
}};

bool is_listed_triple(const FamilyTriple& t);

// sum_{k<n} (a k + b) c^{n-k-1} C(2k,k) f_k, exactly.
BigInt family_sum(const FamilyTriple& t, std::int64_t n, const VerificationContext& ctx);

// n C(2n,n) | family_sum. n = 1 is evaluated but flagged informational;
// unlisted triples are flagged as such.
CongruenceReport check_family(const FamilyTriple& t, std::int64_t n, const VerificationContext& ctx);

// a_1..a_m of the product form; m is the list length.
struct MultiIndexSpec {
  std::vector<std::int64_t> a;

  std::int64_t m() const { return static_cast<std::int64_t>(a.size()); }
};

enum class ThirdVariant { linear, quadratic };  // weights 3k+2 and 9k^2+5k

// sum_{k<n} w(k) (-1)^{(m-1)k} f_k prod_i C(a_i n - 1, k) C(a_i n + k, k) = 0 mod n^2.
CongruenceReport check_third_conjecture(const MultiIndexSpec& spec, std::int64_t n, ThirdVariant variant,
                                        const VerificationContext& ctx);

// C(ap - 1, k) C(ap + k, k) = (-1)^k mod p^2, 0 <= k <= p - 1.
CongruenceReport check_product_note(std::int64_t p, std::int64_t a, std::int64_t k,
                                    const VerificationContext& ctx);

// At prime n = p, the product-form sum and the sum with each product replaced by
// (-1)^{mk} agree mod p^2.
CongruenceReport check_third_prime_crosscheck(const MultiIndexSpec& spec, std::int64_t p, ThirdVariant variant,
                                              const VerificationContext& ctx);

enum class ZwSunVariant {
  guo,           // sum (3k+2)(-1)^k f_k = 0 mod 2n^2, n >= 1
  strengthened,  // sum (9k^2+5k)(-1)^k f_k = 0 mod n^2(n-1), n >= 2
};

CongruenceReport check_zw_sun(std::int64_t n, ZwSunVariant variant, const VerificationContext& ctx);

}  // namespace franel

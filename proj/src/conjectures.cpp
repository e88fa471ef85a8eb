#include "franel/conjectures.hpp"

#include <algorithm>
#include <string>

#include "franel/congruences.hpp"

namespace franel {

namespace {

void require_odd_prime(std::int64_t p, std::string_view who) {
  if (p < 3 || !is_prime(p)) throw UsageError(std::string(who) + ": " + std::to_string(p) + " is not an odd prime");
}

std::int64_t third_weight(std::int64_t k, ThirdVariant v) {
  return v == ThirdVariant::linear ? 3 * k + 2 : 9 * k * k + 5 * k;
}

std::string third_id(ThirdVariant v) { return v == ThirdVariant::linear ? "third-linear" : "third-quadratic"; }

Params third_params(const MultiIndexSpec& spec, std::int64_t n) {
  Params params{{"n", n}, {"m", spec.m()}};
  for (std::size_t i = 0; i < spec.a.size(); ++i) params.push_back({"a" + std::to_string(i + 1), spec.a[i]});
  return params;
}

// sum_{k<n} w(k) (-1)^{(m-1)k} f_k prod_i C(a_i n - 1, k) C(a_i n + k, k), mod modulus.
BigInt third_sum_mod(const MultiIndexSpec& spec, std::int64_t n, ThirdVariant variant, const BigInt& modulus,
                     const VerificationContext& ctx) {
  BigInt acc = 0, t, c;
  for (std::int64_t k = 0; k < n; ++k) {
    t = ctx.f(k) * third_weight(k, variant);
    if (((spec.m() - 1) * k) % 2 != 0) t = -t;
    mpz_mod(t.get_mpz_t(), t.get_mpz_t(), modulus.get_mpz_t());
    for (std::int64_t a : spec.a) {
      c = ctx.choose_generalized(a * n - 1, k) * ctx.choose_generalized(a * n + k, k);
      t *= c;
      mpz_mod(t.get_mpz_t(), t.get_mpz_t(), modulus.get_mpz_t());
    }
    acc += t;
  }
  return acc;
}

}  // namespace

CongruenceReport check_conjecture1(std::int64_t p, const VerificationContext& ctx) {
  require_odd_prime(p, "conjecture1");
  if (p <= 3) throw UsageError("conjecture1: p must be > 3");
  const BigInt m = BigInt(p) * p;
  const std::int64_t sign = ((p - 1) / 2) % 2 == 0 ? 1 : -1;
  return CongruenceReport::make("conjecture1", {{"p", p}}, franel_series_mod(p, m, true, ctx), Residue(sign * p, m));
}

CongruenceReport check_conjecture1_agreement(std::int64_t p, const VerificationContext& ctx) {
  const CongruenceReport p3 = check_theorem2(p, ctx);
  const CongruenceReport p2 = check_conjecture1(p, ctx);
  return CongruenceReport::make("conjecture1-agreement", {{"p", p}}, Residue(p3.lhs.value(), p2.modulus()), p2.lhs,
                                p3.pass == p2.pass ? "verdicts agree" : "verdicts differ");
}

std::string_view conjecture2_case_name(Conjecture2Case c) {
  switch (c) {
    case Conjecture2Case::three_mod_four: return "p=3 mod 4";
    case Conjecture2Case::one_mod_twelve_six_y: return "p=1 mod 12, 6|y";
    case Conjecture2Case::one_mod_twelve_six_x3: return "p=1 mod 12, 6|x-3";
    case Conjecture2Case::five_mod_twelve: return "p=5 mod 12";
  }
  return "?";
}

Conjecture2Target conjecture2_target(std::int64_t p) {
  require_odd_prime(p, "conjecture2");
  if (p % 4 == 3) return {Conjecture2Case::three_mod_four, 0, std::nullopt};
  const TwoSquares sq = two_squares_decompose(p);
  const BigInt x = sq.x, y = sq.y;
  if (p % 12 == 1) {
    const bool six_y = sq.y % 6 == 0;
    const bool six_x3 = (sq.x - 3) % 6 == 0;
    if (six_y == six_x3)
      throw InconsistencyError("conjecture2: sub-case predicates for p=" + std::to_string(p) +
                               " do not select exactly one case");
    if (six_y) return {Conjecture2Case::one_mod_twelve_six_y, 4 * x * x - 2 * p, sq};
    return {Conjecture2Case::one_mod_twelve_six_x3, 2 * p - 4 * x * x, sq};
  }
  // p = 5 mod 12
  const BigInt xy = x * y;
  const int symbol = legendre_symbol(xy, 3);
  if (symbol == 0) throw InconsistencyError("conjecture2: 3 | xy for p=" + std::to_string(p));
  return {Conjecture2Case::five_mod_twelve, 4 * symbol * xy, sq};
}

CongruenceReport check_conjecture2(std::int64_t p, const VerificationContext& ctx) {
  const Conjecture2Target target = conjecture2_target(p);
  const BigInt m = BigInt(p) * p;
  Params params{{"p", p}};
  if (target.squares) {
    params.push_back({"x", target.squares->x});
    params.push_back({"y", target.squares->y});
  }
  return CongruenceReport::make("conjecture2", std::move(params), franel_series_mod(p, m, false, ctx),
                                Residue(target.target, m), std::string(conjecture2_case_name(target.which)));
}

bool is_listed_triple(const FamilyTriple& t) {
  return std::ranges::find(kFamilyNew1, t) != kFamilyNew1.end() ||
         std::ranges::find(kFamilyNew2, t) != kFamilyNew2.end();
}

BigInt family_sum(const FamilyTriple& t, std::int64_t n, const VerificationContext& ctx) {
  BigInt s = 0;
  for (std::int64_t k = 0; k < n; ++k) {
    s *= t.c;
    s += (t.a * k + t.b) * ctx.central(k) * ctx.f(k);
  }
  return s;
}

CongruenceReport check_family(const FamilyTriple& t, std::int64_t n, const VerificationContext& ctx) {
  if (n < 1) throw UsageError("family: n must be >= 1");
  std::string note;
  if (!is_listed_triple(t)) note = "unlisted triple";
  if (n == 1) note += std::string(note.empty() ? "" : "; ") + "informational (n = 1 not claimed)";
  std::string id = "family";
  if (std::ranges::find(kFamilyNew1, t) != kFamilyNew1.end()) id = "conjecture-new1";
  else if (std::ranges::find(kFamilyNew2, t) != kFamilyNew2.end()) id = "conjecture-new2";
  return CongruenceReport::divisibility(std::move(id), {{"a", t.a}, {"b", t.b}, {"c", t.c}, {"n", n}},
                                        family_sum(t, n, ctx), n * ctx.choose(2 * n, n), std::move(note));
}

CongruenceReport check_third_conjecture(const MultiIndexSpec& spec, std::int64_t n, ThirdVariant variant,
                                        const VerificationContext& ctx) {
  if (n < 1) throw UsageError("third conjecture: n must be >= 1");
  if (spec.m() < 1) throw UsageError("third conjecture: need at least one a_i");
  const BigInt modulus = BigInt(n) * n;
  const bool degenerate = std::ranges::find(spec.a, 0) != spec.a.end();
  return CongruenceReport::make(third_id(variant), third_params(spec, n),
                                Residue(third_sum_mod(spec, n, variant, modulus, ctx), modulus), Residue(0, modulus),
                                degenerate ? "degenerate (some a_i = 0)" : "");
}

CongruenceReport check_product_note(std::int64_t p, std::int64_t a, std::int64_t k, const VerificationContext& ctx) {
  require_odd_prime(p, "product-note");
  if (k < 0 || k > p - 1) throw UsageError("product-note: need 0 <= k <= p-1");
  const BigInt m = BigInt(p) * p;
  const BigInt prod = ctx.choose_generalized(a * p - 1, k) * ctx.choose_generalized(a * p + k, k);
  return CongruenceReport::make("product-note", {{"p", p}, {"a", a}, {"k", k}}, Residue(prod, m),
                                Residue(k % 2 == 0 ? 1 : -1, m));
}

CongruenceReport check_third_prime_crosscheck(const MultiIndexSpec& spec, std::int64_t p, ThirdVariant variant,
                                              const VerificationContext& ctx) {
  require_odd_prime(p, "third-crosscheck");
  if (spec.m() < 1) throw UsageError("third-crosscheck: need at least one a_i");
  const BigInt m = BigInt(p) * p;
  // (-1)^{(m-1)k} (-1)^{mk} = (-1)^k
  BigInt reduced = 0;
  for (std::int64_t k = 0; k < p; ++k) {
    BigInt t = ctx.f(k) * third_weight(k, variant);
    if (k % 2 != 0) t = -t;
    reduced += t;
  }
  Params params = third_params(spec, p);
  return CongruenceReport::make("third-crosscheck:" + third_id(variant), std::move(params),
                                Residue(third_sum_mod(spec, p, variant, m, ctx), m), Residue(reduced, m));
}

CongruenceReport check_zw_sun(std::int64_t n, ZwSunVariant variant, const VerificationContext& ctx) {
  const bool guo = variant == ZwSunVariant::guo;
  if (n < (guo ? 1 : 2)) throw UsageError(guo ? "zw-sun-guo: n must be >= 1" : "zw-sun-strengthened: n must be >= 2");
  BigInt s = 0;
  for (std::int64_t k = 0; k < n; ++k) {
    BigInt t = ctx.f(k) * (guo ? 3 * k + 2 : 9 * k * k + 5 * k);
    if (k % 2 != 0) t = -t;
    s += t;
  }
  const BigInt nn = BigInt(n) * n;
  const BigInt modulus = guo ? BigInt(2 * nn) : BigInt(nn * (n - 1));
  return CongruenceReport::divisibility(guo ? "zw-sun-guo" : "zw-sun-strengthened", {{"n", n}}, s, modulus);
}

}  // namespace franel

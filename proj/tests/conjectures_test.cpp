#include "franel/conjectures.hpp"

#include <gtest/gtest.h>

#include "franel/congruences.hpp"

namespace franel {
namespace {

const VerificationContext& ctx() {
  static const VerificationContext c(1000, 1024);
  return c;
}

TEST(Conjecture1, Examples) {
  const auto r5 = check_conjecture1(5, ctx());
  EXPECT_TRUE(r5.pass);
  EXPECT_EQ(r5.modulus(), 25);
  EXPECT_EQ(r5.lhs.value(), 5);
  const auto r7 = check_conjecture1(7, ctx());
  EXPECT_TRUE(r7.pass);
  EXPECT_EQ(r7.rhs.value(), 42);
  EXPECT_TRUE(check_conjecture1(499, ctx()).pass);
  EXPECT_THROW(check_conjecture1(3, ctx()), UsageError);
  EXPECT_THROW(check_conjecture1(9, ctx()), UsageError);
}

TEST(Conjecture1, AgreesWithTheCubeModulusResult) {
  for (std::int64_t p : primes_in_range(5, 300)) {
    const auto r = check_conjecture1_agreement(p, ctx());
    EXPECT_TRUE(r.pass) << p;
    EXPECT_EQ(r.note, "verdicts agree");
  }
}

TEST(Conjecture2, Targets) {
  const auto t7 = conjecture2_target(7);
  EXPECT_EQ(t7.which, Conjecture2Case::three_mod_four);
  EXPECT_EQ(t7.target, 0);
  EXPECT_FALSE(t7.squares.has_value());

  const auto t13 = conjecture2_target(13);
  EXPECT_EQ(t13.which, Conjecture2Case::one_mod_twelve_six_x3);
  EXPECT_EQ(Residue(t13.target, 169).value(), 159);

  const auto t5 = conjecture2_target(5);
  EXPECT_EQ(t5.which, Conjecture2Case::five_mod_twelve);
  EXPECT_EQ(legendre_symbol(2, 3), -1);
  EXPECT_EQ(Residue(t5.target, 25).value(), 17);

  EXPECT_EQ(conjecture2_target(17).target, 16);
  EXPECT_EQ(conjecture2_target(29).target, 40);
  const auto t37 = conjecture2_target(37);
  EXPECT_EQ(t37.which, Conjecture2Case::one_mod_twelve_six_y);
  EXPECT_EQ(Residue(t37.target, 37 * 37).value(), 1299);
}

TEST(Conjecture2, FiveModTwelveTargetIgnoresSigns) {
  for (std::int64_t p : primes_in_range(5, 2000)) {
    if (p % 12 != 5) continue;
    const auto sq = two_squares_decompose(p);
    const BigInt xy = BigInt(sq.x) * sq.y;
    EXPECT_EQ(legendre_symbol(xy, 3) * xy, legendre_symbol(-xy, 3) * -xy);
  }
}

TEST(Conjecture2, HoldsAndRecordsSquares) {
  const auto r13 = check_conjecture2(13, ctx());
  EXPECT_TRUE(r13.pass);
  EXPECT_EQ(r13.params, (Params{{"p", 13}, {"x", 3}, {"y", 2}}));
  EXPECT_EQ(r13.note, "p=1 mod 12, 6|x-3");
  for (std::int64_t p : primes_in_range(3, 400)) EXPECT_TRUE(check_conjecture2(p, ctx()).pass) << p;
}

TEST(Family, TheoremOneSumIsAFamilyMember) {
  const FamilyTriple t{3, 1, -16};
  EXPECT_FALSE(is_listed_triple(t));
  const auto r3 = check_family(t, 3, ctx());
  EXPECT_TRUE(r3.pass);
  EXPECT_EQ(r3.id, "family");
  EXPECT_EQ(r3.note, "unlisted triple");
  EXPECT_EQ(*r3.witness, 7);
  EXPECT_EQ(family_sum(t, 10, ctx()), BigInt("4661024368000"));
  EXPECT_EQ(*check_family(t, 10, ctx()).witness, 2522800);
  for (std::int64_t n = 2; n <= 60; ++n) EXPECT_EQ(family_sum(t, n, ctx()), theorem1_sum(n, ctx()));
}

TEST(Family, ListedExamples) {
  const auto a = check_family({9, 4, 5}, 2, ctx());
  EXPECT_EQ(a.id, "conjecture-new1");
  EXPECT_EQ(family_sum({9, 4, 5}, 2, ctx()), 72);
  EXPECT_EQ(*a.witness, 6);
  EXPECT_TRUE(a.note.empty());

  const auto b = check_family({15, 4, -49}, 2, ctx());
  EXPECT_EQ(b.id, "conjecture-new2");
  EXPECT_EQ(family_sum({15, 4, -49}, 2, ctx()), -120);
  EXPECT_EQ(*b.witness, -10);

  const auto c = check_family({102, 11, 10400}, 7, ctx());
  EXPECT_TRUE(c.pass);
  EXPECT_EQ(*c.witness, BigInt("581653897222408650232"));
}

TEST(Family, NEqualsOneIsInformational) {
  const auto r = check_family({9, 4, 5}, 1, ctx());
  EXPECT_EQ(r.note, "informational (n = 1 not claimed)");
  const auto e = check_family({1, 1, 1}, 1, ctx());
  EXPECT_EQ(e.note, "unlisted triple; informational (n = 1 not claimed)");
  EXPECT_THROW(check_family({9, 4, 5}, 0, ctx()), UsageError);
}

TEST(Family, AllListedTriplesSmallRange) {
  for (std::int64_t n = 2; n <= 80; ++n) {
    for (const auto& t : kFamilyNew1) EXPECT_TRUE(check_family(t, n, ctx()).pass) << t.a << "," << n;
    for (const auto& t : kFamilyNew2) EXPECT_TRUE(check_family(t, n, ctx()).pass) << t.a << "," << n;
  }
}

// Exact sum with generalized binomials, no reduction.
BigInt exact_third(const std::vector<std::int64_t>& a, std::int64_t n, ThirdVariant v) {
  BigInt s = 0;
  const std::int64_t m = static_cast<std::int64_t>(a.size());
  for (std::int64_t k = 0; k < n; ++k) {
    BigInt f = 0;
    for (std::int64_t j = 0; j <= k; ++j) f += pow(binomial(k, j), 3);
    BigInt t = f * (v == ThirdVariant::linear ? 3 * k + 2 : 9 * k * k + 5 * k);
    for (std::int64_t ai : a) t *= binomial_generalized(ai * n - 1, k) * binomial_generalized(ai * n + k, k);
    if (((m - 1) * k) % 2 != 0) t = -t;
    s += t;
  }
  return s;
}

TEST(ThirdConjecture, Examples) {
  EXPECT_EQ(exact_third({1}, 2, ThirdVariant::linear), 32);
  const auto r = check_third_conjecture({{1}}, 2, ThirdVariant::linear, ctx());
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.modulus(), 4);
  EXPECT_EQ(r.params, (Params{{"n", 2}, {"m", 1}, {"a1", 1}}));

  const auto one = check_third_conjecture({{1}}, 1, ThirdVariant::linear, ctx());
  EXPECT_EQ(one.modulus(), 1);
  EXPECT_TRUE(one.pass);

  EXPECT_EQ(exact_third({1, -1}, 3, ThirdVariant::quadratic), 44208);
  EXPECT_TRUE(check_third_conjecture({{1, -1}}, 3, ThirdVariant::quadratic, ctx()).pass);

  EXPECT_EQ(check_third_conjecture({{2, 0}}, 5, ThirdVariant::linear, ctx()).note, "degenerate (some a_i = 0)");
  EXPECT_THROW(check_third_conjecture({{}}, 5, ThirdVariant::linear, ctx()), UsageError);
}

TEST(ThirdConjecture, ReducedSumMatchesExactOracle) {
  const std::vector<std::vector<std::int64_t>> lists{{1}, {-2}, {3, 1}, {-1, 2, -3}, {0, 2}};
  for (const auto& a : lists)
    for (std::int64_t n = 1; n <= 25; ++n)
      for (ThirdVariant v : {ThirdVariant::linear, ThirdVariant::quadratic}) {
        const auto r = check_third_conjecture({a}, n, v, ctx());
        EXPECT_EQ(r.lhs, Residue(exact_third(a, n, v), BigInt(n) * n)) << n;
        EXPECT_TRUE(r.pass) << n;
      }
}

TEST(ThirdConjecture, PrimeCrossCheck) {
  for (std::int64_t p : primes_in_range(3, 60))
    for (ThirdVariant v : {ThirdVariant::linear, ThirdVariant::quadratic}) {
      const auto r = check_third_prime_crosscheck({{2, -1, 3}}, p, v, ctx());
      EXPECT_TRUE(r.pass) << p;
    }
  EXPECT_EQ(check_third_prime_crosscheck({{1}}, 5, ThirdVariant::linear, ctx()).id, "third-crosscheck:third-linear");
}

TEST(ProductNote, Examples) {
  const auto r = check_product_note(3, 1, 1, ctx());
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(binomial(2, 1) * binomial(4, 1), 8);
  EXPECT_EQ(r.lhs.value(), 8);
  const auto s = check_product_note(5, 2, 3, ctx());
  EXPECT_EQ(binomial(9, 3) * binomial(13, 3), 24024);
  EXPECT_EQ(s.lhs.value(), 24);
  EXPECT_TRUE(s.pass);
  const auto z = check_product_note(7, -3, 0, ctx());
  EXPECT_EQ(z.lhs.value(), 1);
  EXPECT_TRUE(z.pass);
  EXPECT_THROW(check_product_note(5, 1, 5, ctx()), UsageError);
}

TEST(ProductNote, AllSmallPrimes) {
  for (std::int64_t p : primes_in_range(3, 40))
    for (std::int64_t a = -4; a <= 4; ++a)
      for (std::int64_t k = 0; k < p; ++k) EXPECT_TRUE(check_product_note(p, a, k, ctx()).pass);
}

TEST(ZwSun, Examples) {
  const auto g2 = check_zw_sun(2, ZwSunVariant::guo, ctx());
  EXPECT_TRUE(g2.pass);
  EXPECT_EQ(g2.modulus(), 8);
  EXPECT_EQ(*g2.witness, -1);
  const auto s2 = check_zw_sun(2, ZwSunVariant::strengthened, ctx());
  EXPECT_TRUE(s2.pass);
  EXPECT_EQ(*s2.witness, -7);
  EXPECT_EQ(*check_zw_sun(10, ZwSunVariant::guo, ctx()).witness, -680366);
  EXPECT_EQ(*check_zw_sun(10, ZwSunVariant::strengthened, ctx()).witness, -4085794);
  EXPECT_THROW(check_zw_sun(1, ZwSunVariant::strengthened, ctx()), UsageError);
  EXPECT_THROW(check_zw_sun(0, ZwSunVariant::guo, ctx()), UsageError);
}

TEST(ZwSun, SmallRange) {
  for (std::int64_t n = 2; n <= 200; ++n) {
    EXPECT_TRUE(check_zw_sun(n, ZwSunVariant::guo, ctx()).pass) << n;
    EXPECT_TRUE(check_zw_sun(n, ZwSunVariant::strengthened, ctx()).pass) << n;
  }
}

}  // namespace
}  // namespace franel

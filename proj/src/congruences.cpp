#include "franel/congruences.hpp"

#include <string>

namespace franel {

namespace {

void require_prime(std::int64_t p, std::string_view who) {
  if (!is_prime(p)) throw UsageError(std::string(who) + ": " + std::to_string(p) + " is not prime");
}

void require_odd_prime(std::int64_t p, std::string_view who) {
  require_prime(p, who);
  if (p == 2) throw UsageError(std::string(who) + ": p must be odd");
}

BigInt int_pow(std::int64_t base, std::int64_t e) { return pow(BigInt(base), static_cast<std::uint64_t>(e)); }

Residue sign_residue(std::int64_t e, const BigInt& m) { return Residue(e % 2 == 0 ? 1 : -1, m); }

std::string chain_id(std::string_view step) { return "reduction-chain:" + std::string(step); }

}  // namespace

BigInt theorem1_sum(std::int64_t n, const VerificationContext& ctx) {
  // Horner in -16: S = (...(t_0 (-16) + t_1)(-16) + ...) + t_{n-1}
  BigInt s = 0;
  for (std::int64_t k = 0; k < n; ++k) {
    s *= -16;
    s += (3 * k + 1) * ctx.central(k) * ctx.f(k);
  }
  return s;
}

CongruenceReport check_theorem1(std::int64_t n, const VerificationContext& ctx) {
  if (n < 2) throw UsageError("theorem1: n must be >= 2");
  return CongruenceReport::divisibility("theorem1", {{"n", n}}, theorem1_sum(n, ctx), n * ctx.choose(2 * n, n));
}

Residue franel_series_mod(std::int64_t p, const BigInt& m, bool weighted, const VerificationContext& ctx) {
  const Residue step = mod_inverse(-16, m);
  Residue weight(1, m);
  Residue acc(0, m);
  for (std::int64_t k = 0; k < p; ++k) {
    BigInt t = ctx.central(k) * ctx.f(k);
    if (weighted) t *= 3 * k + 1;
    acc += Residue(t, m) * weight;
    weight *= step;
  }
  return acc;
}

CongruenceReport check_theorem2(std::int64_t p, const VerificationContext& ctx) {
  require_prime(p, "theorem2");
  const BigInt m = int_pow(p, 3);
  const Residue lhs = franel_series_mod(p, m, true, ctx);
  const std::int64_t sign = ((p - 1) / 2) % 2 == 0 ? 1 : -1;
  return CongruenceReport::make("theorem2", {{"p", p}}, lhs, Residue(sign * p, m));
}

CongruenceReport check_theorem3(std::int64_t p, const VerificationContext& ctx) {
  require_prime(p, "theorem3");
  if (p % 4 != 3) throw UsageError("theorem3: p must be 3 mod 4, got " + std::to_string(p));
  const BigInt m = p;
  return CongruenceReport::make("theorem3", {{"p", p}}, franel_series_mod(p, m, false, ctx), Residue(0, m));
}

std::string_view auxiliary_name(Auxiliary id) {
  switch (id) {
    case Auxiliary::babbage: return "babbage";
    case Auxiliary::morley: return "morley";
    case Auxiliary::jarvis_verrill: return "jarvis_verrill";
    case Auxiliary::multinomial: return "multinomial";
    case Auxiliary::half_binom: return "half_binom";
    case Auxiliary::central_pmod: return "central_pmod";
    case Auxiliary::fermat_square: return "fermat_square";
    case Auxiliary::final_reflect: return "final_reflect";
  }
  return "?";
}

std::optional<Auxiliary> parse_auxiliary(std::string_view name) {
  for (Auxiliary a : kAllAuxiliaries)
    if (auxiliary_name(a) == name) return a;
  return std::nullopt;
}

std::int64_t auxiliary_min_prime(Auxiliary id) { return id == Auxiliary::morley ? 5 : 3; }

std::vector<CongruenceReport> check_auxiliary(Auxiliary id, std::int64_t p, const VerificationContext& ctx) {
  const std::string name(auxiliary_name(id));
  require_odd_prime(p, name);
  if (p < auxiliary_min_prime(id))
    throw UsageError(name + ": requires p >= " + std::to_string(auxiliary_min_prime(id)));
  const std::int64_t h = (p - 1) / 2;
  const BigInt p1 = p, p2 = int_pow(p, 2), p3 = int_pow(p, 3);
  std::vector<CongruenceReport> out;

  switch (id) {
    case Auxiliary::babbage:
      out.push_back(CongruenceReport::make(name, {{"p", p}}, Residue(ctx.choose(2 * p - 1, p - 1), p2),
                                           Residue(1, p2)));
      break;

    case Auxiliary::morley:
      out.push_back(CongruenceReport::make(name, {{"p", p}}, Residue(ctx.choose(p - 1, h), p3),
                                           sign_residue(h, p3) * Residue(4, p3).pow(p - 1)));
      break;

    case Auxiliary::jarvis_verrill:
      for (std::int64_t n = 0; n <= p - 1; ++n)
        out.push_back(CongruenceReport::make(name, {{"p", p}, {"n", n}}, Residue(ctx.f(n), p1),
                                             Residue(-8, p1).pow(n) * Residue(ctx.f(p - 1 - n), p1)));
      break;

    case Auxiliary::multinomial:
      for (std::int64_t k = 1; k < p; ++k) {
        if (k == h) continue;  // handled by half_binom
        const std::int64_t factor = k < h ? 1 : 2;
        const Residue rhs =
            sign_residue(k - 1, p2) * rational_residue(BigInt(factor * p), BigInt(k), p2);
        out.push_back(CongruenceReport::make(
            name, {{"p", p}, {"k", k}}, Residue(ctx.choose(p + 2 * k, 3 * k) * ctx.choose(3 * k, k), p2), rhs,
            k < h ? "branch k < (p-1)/2" : "branch k > (p-1)/2"));
      }
      break;

    case Auxiliary::half_binom: {
      // 2h + 1 = p divides the numerator; the quotient is the summand at k = h.
      BigInt term = ctx.choose(p + 2 * h, 3 * h) * ctx.choose(3 * h, h) * ctx.choose(2 * h, h) * (h - p);
      if (!mpz_divisible_ui_p(term.get_mpz_t(), static_cast<unsigned long>(p)))
        throw InconsistencyError("half_binom: summand at k=(p-1)/2 is not integral for p=" + std::to_string(p));
      mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>(p));
      const BigInt c = ctx.choose(p - 1, h);
      const BigInt closed = -(ctx.choose(2 * p - 1, p - 1) * c * c);
      out.push_back(CongruenceReport::make(name + ":closed-form", {{"p", p}, {"k", h}}, Residue(term, p3),
                                           Residue(closed, p3), term == closed ? "exact equality" : "NOT exact"));
      out.push_back(CongruenceReport::make(name, {{"p", p}, {"k", h}}, Residue(term, p2),
                                           -Residue(16, p2).pow(p - 1)));
      break;
    }

    case Auxiliary::central_pmod: {
      const Residue quarter = mod_inverse(4, p1);
      Residue w(1, p1);
      for (std::int64_t k = 0; k <= p - 1; ++k) {
        out.push_back(CongruenceReport::make(name, {{"p", p}, {"k", k}}, Residue(ctx.choose(2 * k, k), p1) * w,
                                             sign_residue(k, p1) * Residue(ctx.choose(h, k), p1)));
        w *= quarter;
      }
      break;
    }

    case Auxiliary::fermat_square: {
      const Residue lhs = Residue(2, p2).pow(p - 1) + Residue(8, p2).pow(1 - p) - Residue(4, p2).pow(1 - p);
      out.push_back(CongruenceReport::make(name, {{"p", p}}, lhs, Residue(1, p2)));
      break;
    }

    case Auxiliary::final_reflect:
      for (std::int64_t k = 0; k <= h; ++k)
        out.push_back(CongruenceReport::make(
            name, {{"p", p}, {"k", k}}, Residue(ctx.choose(2 * k, h - k), p1),
            sign_residue(h - k, p1) * Residue(ctx.choose(3 * h - 3 * k, h - k), p1)));
      break;
  }
  return out;
}

std::vector<CongruenceReport> check_reduction_chain(std::int64_t p, const VerificationContext& ctx) {
  require_odd_prime(p, "reduction-chain");
  const std::int64_t h = (p - 1) / 2;
  const BigInt p1 = p, p2 = int_pow(p, 2), p3 = int_pow(p, 3), p4 = int_pow(p, 4);
  std::vector<CongruenceReport> out;

  // S mod p^4 so that S/p is known mod p^3.
  const Residue s4 = franel_series_mod(p, p4, true, ctx);
  out.push_back(CongruenceReport::make(chain_id("S-divisible-by-p"), {{"p", p}}, Residue(s4.value(), p1),
                                       Residue(0, p1)));
  if (!out.back().pass) return out;
  const BigInt s_over_p = s4.value() / p;
  const Residue sp3(s_over_p, p3), sp2(s_over_p, p2);

  // Exact rewrite through the theorem-1 quotient sum:
  //   S/p = -4^{1-p} C(2p-1,p-1) sum_k C(p+2k,3k) C(3k,k) C(2k,k) (k-p) / ((2k+1)(-4)^k)
  {
    Residue sum(0, p3);
    const Residue step = mod_inverse(-4, p3);
    Residue w(1, p3);
    for (std::int64_t k = 0; k < p; ++k) {
      BigInt c3 = ctx.choose(3 * k, k);
      mpz_divexact_ui(c3.get_mpz_t(), c3.get_mpz_t(), static_cast<unsigned long>(2 * k + 1));
      sum += Residue(ctx.choose(p + 2 * k, 3 * k) * c3 * ctx.choose(2 * k, k) * (k - p), p3) * w;
      w *= step;
    }
    const Residue rhs = -(Residue(4, p3).pow(1 - p) * Residue(ctx.choose(2 * p - 1, p - 1), p3) * sum);
    out.push_back(CongruenceReport::make(chain_id("newsum-pp"), {{"p", p}}, sp3, rhs));
  }

  const Residue q4 = Residue(4, p2).pow(1 - p);  // 4^{1-p}
  const Residue lead = Residue(-4, p2).pow(h);   // (-4)^{(p-1)/2}
  const Residue pr(p, p2);

  // p 4^{1-p} + (-4)^h + 4^{1-p} sum_{k=1}^{h-1} C(2k,k) (p - p^2/k) / ((2k+1) 4^k)
  {
    Residue sum(0, p2);
    for (std::int64_t k = 1; k <= h - 1; ++k) {
      const Residue inner = pr - rational_residue(p2, BigInt(k), p2);
      sum += Residue(ctx.choose(2 * k, k), p2) * inner * mod_inverse(BigInt(2 * k + 1) * int_pow(4, k), p2);
    }
    out.push_back(CongruenceReport::make(chain_id("newsum2-first"), {{"p", p}}, sp2, pr * q4 + lead + q4 * sum));
  }
  // (-4)^h + 4^{1-p} sum_{k=0}^{h-1} C(2k,k) p / ((2k+1) 4^k)
  {
    Residue sum(0, p2);
    for (std::int64_t k = 0; k <= h - 1; ++k)
      sum += Residue(ctx.choose(2 * k, k) * p, p2) * mod_inverse(BigInt(2 * k + 1) * int_pow(4, k), p2);
    out.push_back(CongruenceReport::make(chain_id("newsum2"), {{"p", p}}, sp2, lead + q4 * sum));
  }
  // (-4)^h + 4^{1-p} sum_{k=0}^{h-1} (-1)^k C(h,k) p / (2k+1)
  {
    Residue sum(0, p2);
    for (std::int64_t k = 0; k <= h - 1; ++k)
      sum += sign_residue(k, p2) * rational_residue(ctx.choose(h, k) * p, BigInt(2 * k + 1), p2);
    out.push_back(CongruenceReport::make(chain_id("newsum3"), {{"p", p}}, sp2, lead + q4 * sum));
  }
  // (-4)^h + 2^{1-p} C(p-1,h)^{-1} - (-1)^h 4^{1-p}
  out.push_back(CongruenceReport::make(
      chain_id("partial-fraction-form"), {{"p", p}}, sp2,
      lead + Residue(2, p2).pow(1 - p) * mod_inverse(ctx.choose(p - 1, h), p2) - sign_residue(h, p2) * q4));
  // (-1)^h (2^{p-1} + 8^{1-p} - 4^{1-p})
  out.push_back(CongruenceReport::make(
      chain_id("fermat-form"), {{"p", p}}, sp2,
      sign_residue(h, p2) * (Residue(2, p2).pow(p - 1) + Residue(8, p2).pow(1 - p) - q4)));
  out.push_back(CongruenceReport::make(chain_id("final"), {{"p", p}}, sp2, sign_residue(h, p2)));

  // C(2k,k) = 0 mod p beyond the midpoint
  for (std::int64_t k = h + 1; k < p; ++k)
    out.push_back(CongruenceReport::make(chain_id("central-vanishing"), {{"p", p}, {"k", k}},
                                         Residue(ctx.central(k), p1), Residue(0, p1)));

  // The mod-p chain for the unweighted sum.
  const Residue unweighted = franel_series_mod(p, p1, false, ctx);
  const Residue quarter = mod_inverse(4, p1);
  {
    Residue sum(0, p1), w(1, p1);
    for (std::int64_t m = 0; m < p; ++m) {
      sum += Residue(ctx.choose(h, m) * ctx.f(m), p1) * w;
      w *= quarter;
    }
    out.push_back(CongruenceReport::make(chain_id("doub-sum"), {{"p", p}}, unweighted, sum));
  }
  {
    Residue sum(0, p1), w(1, p1);
    for (std::int64_t k = 0; k <= h; ++k) {
      sum += sign_residue(h - k, p1) * w *
             Residue(ctx.choose(3 * k, k) * ctx.choose(2 * k, k) * ctx.choose(2 * k, h - k), p1);
      w *= quarter;
    }
    out.push_back(CongruenceReport::make(chain_id("final-0"), {{"p", p}}, unweighted, sum));
  }
  {
    BigInt sum = 0;
    for (std::int64_t k = 0; k <= h; ++k) {
      const BigInt t = ctx.choose(h, k) * ctx.choose(3 * k, k) * ctx.choose(3 * h - 3 * k, h - k);
      if (k % 2 == 0) sum += t;
      else sum -= t;
    }
    out.push_back(CongruenceReport::make(chain_id("final-3"), {{"p", p}}, unweighted, Residue(sum, p1),
                                         p % 4 == 3 ? "p = 3 mod 4: right side is exactly 0" : ""));
  }
  return out;
}

}  // namespace franel

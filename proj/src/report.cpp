#include "franel/report.hpp"

#include <utility>

namespace franel {

IdentityReport IdentityReport::make(std::string id, Params params, BigInt lhs, BigInt rhs, std::string note) {
  IdentityReport r{std::move(id), std::move(params), std::move(lhs), std::move(rhs), false, std::move(note)};
  r.pass = r.lhs == r.rhs;
  return r;
}

CongruenceReport CongruenceReport::make(std::string id, Params params, Residue lhs, Residue rhs,
                                        std::string note) {
  const bool pass = lhs == rhs;
  return CongruenceReport{std::move(id), std::move(params), std::move(lhs), std::move(rhs), pass,
                          std::nullopt, std::move(note)};
}

CongruenceReport CongruenceReport::divisibility(std::string id, Params params, const BigInt& sum,
                                                const BigInt& modulus, std::string note) {
  CongruenceReport r = make(std::move(id), std::move(params), Residue(sum, modulus), Residue(0, modulus),
                            std::move(note));
  if (r.pass) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), sum.get_mpz_t(), modulus.get_mpz_t());
    r.witness = std::move(q);
  }
  return r;
}

}  // namespace franel

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "franel/bigint.hpp"
#include "franel/modular.hpp"

namespace franel {

struct Param {
  std::string name;
  std::int64_t value;

  friend bool operator==(const Param&, const Param&) = default;
};

using Params = std::vector<Param>;

// Outcome of an exact identity check. pass == (lhs == rhs).
struct IdentityReport {
  std::string id;
  Params params;
  BigInt lhs;
  BigInt rhs;
  bool pass = false;
  std::string note;

  static IdentityReport make(std::string id, Params params, BigInt lhs, BigInt rhs, std::string note = {});
};

// Outcome of a congruence or divisibility check. pass == (lhs == rhs) as residues.
struct CongruenceReport {
  std::string id;
  Params params;
  Residue lhs;
  Residue rhs;
  bool pass = false;
  std::optional<BigInt> witness;  // exact quotient, for divisibility statements
  std::string note;

  const BigInt& modulus() const { return lhs.modulus(); }

  static CongruenceReport make(std::string id, Params params, Residue lhs, Residue rhs,
                               std::string note = {});

  // S = 0 mod m; the witness is S / m when the division is exact.
  static CongruenceReport divisibility(std::string id, Params params, const BigInt& sum,
                                       const BigInt& modulus, std::string note = {});
};

}  // namespace franel

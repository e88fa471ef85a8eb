#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "franel/report.hpp"

namespace franel {

enum class Verdict { pass, fail, skipped };

std::string_view verdict_name(Verdict v);

// Serialized form of any report. Big integers are decimal strings.
struct Record {
  std::string statement;
  Params params;
  std::optional<std::string> modulus;  // absent for exact identities
  std::string lhs;
  std::string rhs;
  Verdict verdict = Verdict::fail;
  std::optional<std::string> witness;
  std::optional<std::string> skipped_reason;
  std::string note;
  bool informational = false;  // evaluated but outside the claimed range; not counted
};

Record to_record(const IdentityReport& r);
Record to_record(const CongruenceReport& r);
Record skipped_record(std::string statement, Params params, std::string reason);
Record error_record(std::string statement, Params params, std::string what);

enum class Format { json_lines, tsv };

std::optional<Format> parse_format(std::string_view name);

std::string format_record(const Record& r, Format f);

struct Counts {
  std::int64_t pass = 0;
  std::int64_t fail = 0;
  std::int64_t skipped = 0;
  std::int64_t informational = 0;

  friend bool operator==(const Counts&, const Counts&) = default;
};

void tally(Counts& c, const Record& r);

// Per-statement counts, statements in a fixed caller-chosen order.
struct Summary {
  std::vector<std::pair<std::string, Counts>> per_statement;

  Counts total() const;
  bool all_pass() const { return total().fail == 0; }
  friend bool operator==(const Summary&, const Summary&) = default;
};

std::string format_summary(const Summary& s, Format f);

}  // namespace franel

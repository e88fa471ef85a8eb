#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "franel/conjectures.hpp"
#include "franel/franel_numbers.hpp"
#include "franel/report_format.hpp"

namespace franel {

struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  friend bool operator==(const Range&, const Range&) = default;
};

// "a..b" or a single integer "a". Throws UsageError.
Range parse_range(std::string_view text);

enum class Command { compute, verify, sweep, cache };

struct RunConfig {
  Command command = Command::verify;
  std::vector<std::string> statements;
  std::optional<Range> n_range;
  std::optional<Range> p_range;
  std::vector<Route> routes;
  bool cross_check = false;
  Format format = Format::json_lines;
  std::optional<std::filesystem::path> cache_path;
  int workers = 1;
  bool emit_records = false;                // sweep: also print every record
  std::vector<FamilyTriple> extra_triples;  // for the "family" statement
};

// Exit codes.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

enum class ParamKind { n, p };

struct StatementInfo {
  std::string_view id;
  ParamKind kind;
  Range default_range;  // the acceptance grid
  std::string_view description;
};

// All statements, in sweep order.
const std::vector<StatementInfo>& statement_catalog();
const StatementInfo* find_statement(std::string_view id);

// Ordered a-lists of length 1..max_m over {lo..hi}; the grid for the third conjecture.
std::vector<MultiIndexSpec> third_conjecture_grid(int max_m = 3, std::int64_t lo = -3, std::int64_t hi = 3);

// Runs every selected statement over its range with `workers` threads.
// Records come back in a fixed order independent of the worker count.
struct SweepOutcome {
  std::vector<Record> records;
  Summary summary;
};

SweepOutcome run_statements(const RunConfig& cfg, const std::vector<std::string>& statements);

int cmd_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_cache(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace franel

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "franel/franel_numbers.hpp"

namespace franel {

// Load or store failure. line() is the 1-based line of the first bad record
// (0 when the problem is not tied to a line, e.g. an unwritable path).
class CacheError : public std::runtime_error {
 public:
  CacheError(std::int64_t line, const std::string& what);
  std::int64_t line() const { return line_; }

 private:
  std::int64_t line_;
};

// Text format, LF line endings:
//   franel-cache v1 N=<max-index>
//   <n>\t<decimal f_n>        for n = 0..N
void write_franel_cache(std::ostream& out, const FranelTable& table);

// Parses and validates: exact header, contiguous indices, canonical decimals,
// f_0 = 1, f_1 = 2 and every recurrence step. The result is tagged Route::recurrence.
FranelTable read_franel_cache(std::istream& in);

// Writes a temporary file next to `path` and renames it into place.
void store_franel_cache(const std::filesystem::path& path, const FranelTable& table);
FranelTable load_franel_cache(const std::filesystem::path& path);

}  // namespace franel

#include "franel/cache.hpp"

#include <unistd.h>

#include <charconv>
#include <optional>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

namespace franel {

namespace {

constexpr std::string_view kHeaderPrefix = "franel-cache v1 N=";

bool all_digits(std::string_view s) {
  return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
}

std::optional<std::int64_t> parse_index(std::string_view s) {
  if (!all_digits(s) || (s.size() > 1 && s[0] == '0')) return std::nullopt;
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

CacheError::CacheError(std::int64_t line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

void write_franel_cache(std::ostream& out, const FranelTable& table) {
  out << kHeaderPrefix << table.max_index() << '\n';
  for (std::int64_t n = 0; n <= table.max_index(); ++n) out << n << '\t' << table[n].get_str() << '\n';
}

FranelTable read_franel_cache(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw CacheError(1, "missing header");
  if (!line.starts_with(kHeaderPrefix)) throw CacheError(1, "malformed header '" + line + "'");
  const auto max_index = parse_index(std::string_view(line).substr(kHeaderPrefix.size()));
  if (!max_index) throw CacheError(1, "malformed header '" + line + "'");

  std::vector<BigInt> values;
  values.reserve(static_cast<std::size_t>(*max_index) + 1);
  std::int64_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const std::int64_t expected = line_no - 2;
    if (expected > *max_index) throw CacheError(line_no, "record beyond declared N=" + std::to_string(*max_index));
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw CacheError(line_no, "expected '<n>\\t<f_n>'");
    const auto index = parse_index(std::string_view(line).substr(0, tab));
    if (!index || *index != expected)
      throw CacheError(line_no, "expected index " + std::to_string(expected));
    const std::string_view digits = std::string_view(line).substr(tab + 1);
    if (!all_digits(digits) || (digits.size() > 1 && digits[0] == '0'))
      throw CacheError(line_no, "malformed value");
    values.emplace_back(std::string(digits), 10);
  }
  if (static_cast<std::int64_t>(values.size()) != *max_index + 1)
    throw CacheError(line_no + 1, "truncated: expected " + std::to_string(*max_index + 1) + " records");

  // Every value is re-derived from its two predecessors; record n sits on line n + 2.
  if (values[0] != 1) throw CacheError(2, "f_0 must be 1");
  if (values.size() > 1 && values[1] != 2) throw CacheError(3, "f_1 must be 2");
  for (std::int64_t n = 1; n + 1 < static_cast<std::int64_t>(values.size()); ++n) {
    const BigInt nn = BigInt(n) * n;
    if (BigInt(n + 1) * (n + 1) * values[n + 1] != (7 * nn + 7 * n + 2) * values[n] + 8 * nn * values[n - 1])
      throw CacheError(n + 3, "f_" + std::to_string(n + 1) + " violates the Franel recurrence");
  }
  return FranelTable(std::move(values), Route::recurrence);
}

void store_franel_cache(const std::filesystem::path& path, const FranelTable& table) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError(0, "cannot write cache file " + path.string());
    write_franel_cache(out, table);
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw CacheError(0, "write failed for cache file " + path.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw CacheError(0, "cannot move cache into place at " + path.string());
  }
}

FranelTable load_franel_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CacheError(0, "cannot open cache file " + path.string());
  return read_franel_cache(in);
}

}  // namespace franel

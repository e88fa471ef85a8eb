#include "franel/cache.hpp"

#include <gtest/gtest.h>
#include <unistd.h>

#include <fstream>
#include <sstream>

namespace franel {
namespace {

namespace fs = std::filesystem;

FranelTable small_table() { return FranelTable({1, 2, 10, 56}, Route::recurrence); }

std::int64_t error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    read_franel_cache(in);
  } catch (const CacheError& e) {
    return e.line();
  }
  return -1;
}

TEST(Cache, WriteFormat) {
  std::ostringstream out;
  write_franel_cache(out, small_table());
  EXPECT_EQ(out.str(), "franel-cache v1 N=3\n0\t1\n1\t2\n2\t10\n3\t56\n");
}

TEST(Cache, RoundTrip) {
  std::stringstream io;
  const FranelTable t = build_franel_table(200, Route::recurrence);
  write_franel_cache(io, t);
  const FranelTable back = read_franel_cache(io);
  EXPECT_EQ(back, t);
  EXPECT_EQ(back.route(), Route::recurrence);
}

TEST(Cache, TamperedValueIsLocated) {
  EXPECT_EQ(error_line("franel-cache v1 N=3\n0\t1\n1\t2\n2\t11\n3\t56\n"), 4);
  // f_10 off by one: the step producing f_10 fails first, on the line holding f_10
  std::ostringstream out;
  write_franel_cache(out, build_franel_table(20, Route::recurrence));
  std::string text = out.str();
  const std::string good = "\n10\t" + build_franel_table(10, Route::recurrence)[10].get_str() + "\n";
  const auto pos = text.find(good);
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, good.size(), "\n10\t" + BigInt(build_franel_table(10, Route::recurrence)[10] + 1).get_str() + "\n");
  EXPECT_EQ(error_line(text), 12);
}

TEST(Cache, StructuralErrors) {
  EXPECT_EQ(error_line(""), 1);
  try {
    std::istringstream in("");
    read_franel_cache(in);
  } catch (const CacheError& e) {
    EXPECT_NE(std::string(e.what()).find("missing header"), std::string::npos);
  }
  EXPECT_EQ(error_line("franel-cache v2 N=3\n"), 1);
  EXPECT_EQ(error_line("franel-cache v1 N=x\n"), 1);
  EXPECT_EQ(error_line("franel-cache v1 N=3\n0\t1\n2\t10\n"), 3);    // gap
  EXPECT_EQ(error_line("franel-cache v1 N=3\n0\t1\n1\t2\n"), 4);     // truncated
  EXPECT_EQ(error_line("franel-cache v1 N=1\n0\t1\n1\t02\n"), 3);    // non-canonical
  EXPECT_EQ(error_line("franel-cache v1 N=1\n0\t1\r\n1\t2\r\n"), 2);  // CRLF
  EXPECT_EQ(error_line("franel-cache v1 N=1\n0\t2\n1\t2\n"), 2);
  EXPECT_EQ(error_line("franel-cache v1 N=1\n0\t1\n1\t3\n"), 3);
  EXPECT_EQ(error_line("franel-cache v1 N=1\n0\t1\n1\t2\n2\t10\n"), 4);  // beyond N
  EXPECT_EQ(error_line("franel-cache v1 N=1\n0\t1\n1\t2\n"), -1);
}

TEST(Cache, StoreAndLoadFile) {
  const fs::path dir = fs::temp_directory_path() / ("franel_cache_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const fs::path file = dir / "f.cache";
  store_franel_cache(file, small_table());
  EXPECT_EQ(load_franel_cache(file), small_table());
  // overwrite in place; no temporary files are left behind
  store_franel_cache(file, build_franel_table(50, Route::recurrence));
  EXPECT_EQ(load_franel_cache(file).max_index(), 50);
  EXPECT_EQ(std::distance(fs::directory_iterator(dir), fs::directory_iterator{}), 1);
  fs::remove_all(dir);
}

TEST(Cache, UnwritablePath) {
  const fs::path file = "/nonexistent-dir/sub/f.cache";
  EXPECT_THROW(store_franel_cache(file, small_table()), CacheError);
  EXPECT_FALSE(fs::exists(file));
  EXPECT_THROW(load_franel_cache(file), CacheError);
}

}  // namespace
}  // namespace franel

#include "franel/harness.hpp"

#include <gtest/gtest.h>
#include <unistd.h>

#include <fstream>
#include <sstream>

#include "franel/cache.hpp"

namespace franel {
namespace {

namespace fs = std::filesystem;

RunConfig verify_config(std::vector<std::string> statements) {
  RunConfig cfg;
  cfg.command = Command::verify;
  cfg.statements = std::move(statements);
  return cfg;
}

struct Captured {
  int code;
  std::string out;
  std::string err;
};

Captured run_captured(const RunConfig& cfg) {
  std::ostringstream out, err;
  const int code = run(cfg, out, err);
  return {code, out.str(), err.str()};
}

std::int64_t count_lines(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

TEST(ParseRange, Forms) {
  EXPECT_EQ(parse_range("3..100"), (Range{3, 100}));
  EXPECT_EQ(parse_range("7"), (Range{7, 7}));
  EXPECT_EQ(parse_range("-3..3"), (Range{-3, 3}));
  EXPECT_THROW(parse_range("5..2"), UsageError);
  EXPECT_THROW(parse_range("a..b"), UsageError);
  EXPECT_THROW(parse_range(""), UsageError);
  EXPECT_THROW(parse_range("1...4"), UsageError);
}

TEST(Catalog, IdsAreUnique) {
  const auto& cat = statement_catalog();
  for (std::size_t i = 0; i < cat.size(); ++i)
    for (std::size_t j = i + 1; j < cat.size(); ++j) EXPECT_NE(cat[i].id, cat[j].id);
  EXPECT_NE(find_statement("theorem2"), nullptr);
  EXPECT_EQ(find_statement("theorem9"), nullptr);
}

TEST(ThirdGrid, OrderedTuples) {
  const auto grid = third_conjecture_grid(3, -3, 3);
  EXPECT_EQ(grid.size(), 7u + 49u + 343u);
  EXPECT_EQ(grid.front().a, (std::vector<std::int64_t>{-3}));
  EXPECT_EQ(grid.back().a, (std::vector<std::int64_t>{3, 3, 3}));
}

TEST(Format, JsonRecord) {
  const auto rec = to_record(CongruenceReport::divisibility("theorem1", {{"n", 3}}, 420, 60));
  EXPECT_EQ(format_record(rec, Format::json_lines),
            R"({"statement":"theorem1","params":{"n":3},"modulus":"60","lhs":"0","rhs":"0","verdict":"pass","witness":"7"})");
  const auto id = to_record(IdentityReport::make("strehl", {{"n", 2}}, 10, 10));
  EXPECT_EQ(format_record(id, Format::json_lines),
            R"({"statement":"strehl","params":{"n":2},"modulus":null,"lhs":"10","rhs":"10","verdict":"pass"})");
}

TEST(Format, TsvRecord) {
  const auto rec = to_record(CongruenceReport::make("theorem2", {{"p", 3}}, Residue(24, 27), Residue(-3, 27)));
  EXPECT_EQ(format_record(rec, Format::tsv), "theorem2\tp=3\t27\t24\t24\tpass\t-\t-");
  const auto sk = skipped_record("theorem3", {{"p", 5}}, "requires p = 3 mod 4");
  EXPECT_EQ(format_record(sk, Format::tsv), "theorem3\tp=5\t-\t-\t-\tskipped\t-\trequires p = 3 mod 4");
}

TEST(Format, SummaryCounts) {
  Summary s;
  Counts c;
  tally(c, to_record(IdentityReport::make("strehl", {{"n", 2}}, 10, 10)));
  tally(c, to_record(IdentityReport::make("strehl", {{"n", 3}}, 10, 11)));
  tally(c, skipped_record("strehl", {{"n", 4}}, "x"));
  s.per_statement.emplace_back("strehl", c);
  EXPECT_EQ(c, (Counts{1, 1, 1, 0}));
  EXPECT_FALSE(s.all_pass());
  EXPECT_EQ(format_summary(s, Format::tsv), "summary\tstrehl\tpass=1\tfail=1\tskipped=1\tinformational=0\n"
            "summary\ttotal\tpass=1\tfail=1\tskipped=1\tinformational=0");
}

TEST(RunStatements, ResultsIndependentOfWorkerCount) {
  RunConfig cfg;
  cfg.command = Command::sweep;
  cfg.n_range = Range{0, 40};
  cfg.p_range = Range{3, 60};
  const std::vector<std::string> ids{"franel-routes", "induction",  "theorem1",  "theorem2",  "theorem3",
                                     "morley",        "conjecture2", "third-linear", "product-note", "zw-sun-guo"};
  cfg.workers = 1;
  const auto one = run_statements(cfg, ids);
  cfg.workers = 8;
  const auto eight = run_statements(cfg, ids);
  EXPECT_EQ(one.summary, eight.summary);
  ASSERT_EQ(one.records.size(), eight.records.size());
  for (std::size_t i = 0; i < one.records.size(); ++i)
    EXPECT_EQ(format_record(one.records[i], Format::json_lines), format_record(eight.records[i], Format::json_lines));
  EXPECT_TRUE(one.summary.all_pass());
  EXPECT_GT(one.summary.total().skipped, 0);
}

TEST(Verify, Theorem2RecordCountOverOddPrimesTo100) {
  auto cfg = verify_config({"theorem2"});
  cfg.p_range = Range{3, 100};
  const auto c = run_captured(cfg);
  EXPECT_EQ(c.code, kExitPass);
  EXPECT_EQ(count_lines(c.out), 24);  // odd primes below 100
}

TEST(Verify, SkipsOutsideTheClaimedRange) {
  auto cfg = verify_config({"theorem3"});
  cfg.p_range = Range{13, 13};
  const auto c = run_captured(cfg);
  EXPECT_EQ(c.code, kExitPass);
  EXPECT_NE(c.out.find(R"("verdict":"skipped")"), std::string::npos);
}

TEST(Verify, ExitCodes) {
  EXPECT_EQ(run_captured(verify_config({"no-such-statement"})).code, kExitUsage);
  auto bad_range = verify_config({"theorem1"});
  bad_range.n_range = Range{-4, 10};
  EXPECT_EQ(run_captured(bad_range).code, kExitUsage);
  auto bad_workers = verify_config({"theorem2"});
  bad_workers.workers = 0;
  EXPECT_EQ(run_captured(bad_workers).code, kExitUsage);
  EXPECT_EQ(run_captured(verify_config({"family"})).code, kExitUsage);  // needs a triple

  // An arbitrary triple is not a family member: a genuine mathematical failure.
  auto fam = verify_config({"family"});
  fam.extra_triples = {{1, 1, 1}};
  fam.n_range = Range{2, 10};
  const auto c = run_captured(fam);
  EXPECT_EQ(c.code, kExitFail);
  EXPECT_NE(c.err.find("FIRST FAILURE:"), std::string::npos);
}

TEST(Compute, Output) {
  RunConfig cfg;
  cfg.command = Command::compute;
  cfg.n_range = Range{0, 3};
  cfg.format = Format::tsv;
  const auto c = run_captured(cfg);
  EXPECT_EQ(c.code, kExitPass);
  EXPECT_EQ(c.out, "0\t1\n1\t2\n2\t10\n3\t56\n");

  cfg.format = Format::json_lines;
  cfg.n_range = Range{3, 3};
  EXPECT_EQ(run_captured(cfg).out, R"({"n":3,"f":"56","route":"recurrence"})" "\n");

  cfg.routes = {Route::direct, Route::strehl, Route::recurrence, Route::sun_expansion};
  cfg.cross_check = true;
  cfg.n_range = Range{0, 60};
  EXPECT_EQ(run_captured(cfg).code, kExitPass);

  cfg.routes = {Route::direct};
  EXPECT_EQ(run_captured(cfg).code, kExitUsage);
  cfg.cross_check = false;
  cfg.n_range.reset();
  EXPECT_EQ(run_captured(cfg).code, kExitUsage);
}

TEST(CacheCommand, CreatesExtendsAndRejectsCorruption) {
  const fs::path dir = fs::temp_directory_path() / ("franel_harness_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  RunConfig cfg;
  cfg.command = Command::cache;
  cfg.cache_path = dir / "f.cache";
  cfg.n_range = Range{0, 20};
  EXPECT_EQ(run_captured(cfg).code, kExitPass);
  EXPECT_EQ(load_franel_cache(*cfg.cache_path).max_index(), 20);

  auto v = verify_config({"theorem1"});
  v.cache_path = cfg.cache_path;
  v.n_range = Range{2, 50};
  EXPECT_EQ(run_captured(v).code, kExitPass);
  EXPECT_EQ(load_franel_cache(*cfg.cache_path).max_index(), 50);

  {
    std::ofstream f(*cfg.cache_path, std::ios::trunc);
    f << "franel-cache v1 N=3\n0\t1\n1\t2\n2\t11\n3\t56\n";
  }
  const auto c = run_captured(v);
  EXPECT_EQ(c.code, kExitUsage);
  EXPECT_NE(c.err.find("line 4"), std::string::npos);

  cfg.cache_path = "/nonexistent-dir/f.cache";
  EXPECT_NE(run_captured(cfg).code, kExitPass);
  fs::remove_all(dir);
}

}  // namespace
}  // namespace franel

// franel-verify: compute Franel numbers and verify the identities,
// supercongruences and conjectures built on them.
//
//   franel-verify compute --n-range 0..300 --route direct --route recurrence --cross-check
//   franel-verify verify  --statements theorem2,theorem3 --p-range 3..1000
//   franel-verify sweep   --workers 8
//   franel-verify cache   --cache franel.cache --n-range 0..1000
//
// Exit status: 0 everything passed, 1 a mathematical failure, 2 usage or configuration error.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "franel/harness.hpp"

namespace {

franel::FamilyTriple parse_triple(const std::string& text) {
  std::istringstream in(text);
  franel::FamilyTriple t{};
  char c1 = 0, c2 = 0;
  if (!(in >> t.a >> c1 >> t.b >> c2 >> t.c) || c1 != ',' || c2 != ',' || !in.eof())
    throw franel::UsageError("malformed --triple '" + text + "' (expected a,b,c)");
  return t;
}

std::string statement_help() {
  std::ostringstream out;
  out << "Statements:\n";
  for (const auto& s : franel::statement_catalog())
    out << "  " << s.id << (s.kind == franel::ParamKind::n ? "  [n " : "  [p ") << s.default_range.lo << ".."
        << s.default_range.hi << "]  " << s.description << '\n';
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification harness for Franel-number identities and supercongruences"};
  app.footer(statement_help());
  app.require_subcommand(1);

  std::vector<std::string> statements;
  std::string n_range, p_range, format = "json-lines", cache;
  std::vector<std::string> routes, triples;
  bool cross_check = false, records = false;
  int workers = 1;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json-lines or tsv")->check(CLI::IsMember({"json-lines", "tsv"}));
    sub->add_option("--cache", cache, "Franel cache file (validated on load, written atomically)");
  };
  auto add_ranges = [&](CLI::App* sub) {
    sub->add_option("--n-range", n_range, "inclusive n range, a..b");
    sub->add_option("--p-range", p_range, "inclusive range searched for primes, a..b");
  };
  auto add_run = [&](CLI::App* sub) {
    sub->add_option("--statements", statements, "statement ids, comma separated")->delimiter(',');
    sub->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--triple", triples, "extra a,b,c triple for the 'family' statement");
  };

  auto* compute = app.add_subcommand("compute", "print f_n over --n-range");
  add_common(compute);
  compute->add_option("--n-range", n_range, "inclusive n range, a..b")->required();
  compute->add_option("--route", routes, "direct, strehl, recurrence or sun-expansion (repeatable)");
  compute->add_flag("--cross-check", cross_check, "fail unless all given routes agree");

  auto* verify = app.add_subcommand("verify", "run named statements and print one record per check");
  add_common(verify);
  add_ranges(verify);
  add_run(verify);
  verify->get_option("--statements")->required();

  auto* sweep = app.add_subcommand("sweep", "run the full verification grid and print a summary");
  add_common(sweep);
  add_ranges(sweep);
  add_run(sweep);
  sweep->add_flag("--records", records, "also print every record");

  auto* cache_cmd = app.add_subcommand("cache", "create, extend or validate a cache file");
  cache_cmd->add_option("--cache", cache, "cache file")->required();
  cache_cmd->add_option("--n-range", n_range, "extend the cache to the upper bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return franel::kExitUsage;
  }

  franel::RunConfig cfg;
  try {
    if (*compute) cfg.command = franel::Command::compute;
    else if (*verify) cfg.command = franel::Command::verify;
    else if (*sweep) cfg.command = franel::Command::sweep;
    else cfg.command = franel::Command::cache;
    cfg.statements = statements;
    if (!n_range.empty()) cfg.n_range = franel::parse_range(n_range);
    if (!p_range.empty()) cfg.p_range = franel::parse_range(p_range);
    for (const auto& r : routes) {
      auto route = franel::parse_route(r);
      if (!route) throw franel::UsageError("unknown route '" + r + "'");
      cfg.routes.push_back(*route);
    }
    cfg.cross_check = cross_check;
    cfg.format = *franel::parse_format(format);
    if (!cache.empty()) cfg.cache_path = cache;
    cfg.workers = workers;
    cfg.emit_records = records;
    for (const auto& t : triples) cfg.extra_triples.push_back(parse_triple(t));
  } catch (const franel::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return franel::kExitUsage;
  }
  return franel::run(cfg, std::cout, std::cerr);
}

#include "franel/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <map>
#include <ostream>
#include <thread>

#include "franel/cache.hpp"
#include "franel/congruences.hpp"
#include "franel/identities.hpp"

namespace franel {

namespace {

constexpr std::string_view kFamilyId = "family";

const std::vector<StatementInfo> kCatalog = {
    {"franel-routes", ParamKind::n, {0, 300}, "four Franel routes agree"},
    {"macmahon", ParamKind::n, {0, 100}, "MacMahon identity at x = -3..3"},
    {"partial-fraction", ParamKind::n, {0, 200}, "partial-fraction identity at x = 1/2"},
    {"sun-expansion", ParamKind::n, {0, 100}, "f_n as sum of C(n+2k,3k)C(3k,k)C(2k,k)(-4)^{n-k}"},
    {"strehl", ParamKind::n, {0, 100}, "f_n = sum C(n,k)^2 C(2k,n)"},
    {"recurrence", ParamKind::n, {2, 300}, "Franel recurrence step reaching f_n"},
    {"induction", ParamKind::n, {0, 80}, "closed form of the weighted partial sum, all k <= n"},
    {"induction-step", ParamKind::n, {0, 79}, "inductive step n -> n+1, all k <= n"},
    {"summation-lemma", ParamKind::n, {0, 80}, "sum C(n,m)C(m+2k,3k)(-1)^{m-k} = C(2k,n-k)(-1)^{n-k}"},
    {"integrality", ParamKind::n, {2, 200}, "integrality of the theorem-1 quotient sum"},
    {"theorem1", ParamKind::n, {2, 500}, "n C(2n,n) divides the weighted sum"},
    {"theorem2", ParamKind::p, {3, 999}, "weighted series = p(-1)^{(p-1)/2} mod p^3"},
    {"theorem3", ParamKind::p, {3, 999}, "unweighted series = 0 mod p, p = 3 mod 4"},
    {"babbage", ParamKind::p, {3, 499}, "C(2p-1,p-1) = 1 mod p^2"},
    {"morley", ParamKind::p, {3, 499}, "C(p-1,(p-1)/2) = (-1)^{(p-1)/2} 4^{p-1} mod p^3"},
    {"jarvis_verrill", ParamKind::p, {3, 499}, "f_n = (-8)^n f_{p-1-n} mod p"},
    {"multinomial", ParamKind::p, {3, 499}, "C(p+2k,3k)C(3k,k) mod p^2, both branches"},
    {"half_binom", ParamKind::p, {3, 499}, "middle summand = -16^{p-1} mod p^2"},
    {"central_pmod", ParamKind::p, {3, 499}, "C(2k,k)4^{-k} = (-1)^k C((p-1)/2,k) mod p"},
    {"fermat_square", ParamKind::p, {3, 499}, "2^{p-1} + 8^{1-p} - 4^{1-p} = 1 mod p^2"},
    {"final_reflect", ParamKind::p, {3, 499}, "reflection of C(2k,(p-1)/2-k) mod p"},
    {"reduction-chain", ParamKind::p, {3, 499}, "every intermediate congruence of both proofs"},
    {"final3-symmetry", ParamKind::p, {3, 499}, "pairwise cancellation for p = 3 mod 4"},
    {"conjecture1", ParamKind::p, {3, 999}, "weighted series = p(-1)^{(p-1)/2} mod p^2, p > 3"},
    {"conjecture1-agreement", ParamKind::p, {3, 999}, "p^2 and p^3 checks agree"},
    {"conjecture2", ParamKind::p, {3, 999}, "unweighted series mod p^2, four cases"},
    {"conjecture-new1", ParamKind::n, {1, 500}, "divisibility for the seven positive-base triples"},
    {"conjecture-new2", ParamKind::n, {1, 500}, "divisibility for the five negative-base triples"},
    {kFamilyId, ParamKind::n, {1, 500}, "divisibility for user-supplied triples (--triple)"},
    {"third-linear", ParamKind::n, {1, 120}, "product form with weight 3k+2 = 0 mod n^2"},
    {"third-quadratic", ParamKind::n, {1, 120}, "product form with weight 9k^2+5k = 0 mod n^2"},
    {"third-crosscheck", ParamKind::p, {3, 120}, "product form vs (-1)^{mk} form at prime n"},
    {"product-note", ParamKind::p, {3, 50}, "C(ap-1,k)C(ap+k,k) = (-1)^k mod p^2, a = 1..5"},
    {"zw-sun-guo", ParamKind::n, {1, 500}, "sum (3k+2)(-1)^k f_k = 0 mod 2n^2"},
    {"zw-sun-strengthened", ParamKind::n, {2, 500}, "sum (9k^2+5k)(-1)^k f_k = 0 mod n^2(n-1)"},
};

struct Cell {
  std::size_t statement;  // index into the selected statement list
  std::int64_t param;
  std::size_t variant;
};

struct Plan {
  std::vector<const StatementInfo*> statements;
  std::vector<Range> ranges;
  std::vector<Cell> cells;
  std::vector<MultiIndexSpec> grid;
  std::vector<FamilyTriple> extra_triples;
  std::int64_t max_index = 1;
};

Params param_of(const StatementInfo& s, std::int64_t v) { return {{s.kind == ParamKind::n ? "n" : "p", v}}; }

std::optional<std::string> skip_reason(std::string_view id, ParamKind kind, std::int64_t v) {
  if (kind == ParamKind::p) {
    if (v == 2) return "odd prime required";
    if ((id == "theorem3" || id == "final3-symmetry") && v % 4 != 3) return "p must be 3 mod 4";
    if ((id == "conjecture1" || id == "conjecture1-agreement") && v <= 3) return "p must be > 3";
    if (id == "morley" && v <= 3) return "p must be > 3";
    return std::nullopt;
  }
  if (v < 0) return "n must be >= 0";
  if ((id == "theorem1" || id == "integrality" || id == "recurrence" || id == "zw-sun-strengthened") && v < 2)
    return "n must be >= 2";
  if ((id == "zw-sun-guo" || id.starts_with("third-") || id.starts_with("conjecture-new") || id == kFamilyId) &&
      v < 1)
    return "n must be >= 1";
  return std::nullopt;
}

std::size_t variant_count(std::string_view id, const Plan& plan) {
  if (id == "conjecture-new1") return kFamilyNew1.size();
  if (id == "conjecture-new2") return kFamilyNew2.size();
  if (id == kFamilyId) return plan.extra_triples.size();
  if (id == "third-linear" || id == "third-quadratic") return plan.grid.size();
  if (id == "third-crosscheck") return plan.grid.size() * 2;
  if (id == "product-note") return 5;
  return 1;
}

Plan make_plan(const RunConfig& cfg, const std::vector<std::string>& ids) {
  Plan plan;
  plan.extra_triples = cfg.extra_triples;
  for (const auto& id : ids) {
    const StatementInfo* s = find_statement(id);
    if (!s) throw UsageError("unknown statement id '" + id + "'");
    if (std::ranges::find(plan.statements, s) != plan.statements.end()) continue;
    Range r = s->default_range;
    if (s->kind == ParamKind::n && cfg.n_range) r = *cfg.n_range;
    if (s->kind == ParamKind::p && cfg.p_range) r = *cfg.p_range;
    if (r.lo > r.hi) throw UsageError("empty range for '" + id + "'");
    if (s->kind == ParamKind::n && r.lo < 0) throw UsageError("n-range must be nonnegative for '" + id + "'");
    if (id == kFamilyId && plan.extra_triples.empty()) throw UsageError("statement 'family' needs --triple a,b,c");
    plan.statements.push_back(s);
    plan.ranges.push_back(r);
  }
  if (std::ranges::any_of(plan.statements, [](auto* s) { return s->id.starts_with("third-"); }))
    plan.grid = third_conjecture_grid();

  for (std::size_t i = 0; i < plan.statements.size(); ++i) {
    const StatementInfo& s = *plan.statements[i];
    const Range r = plan.ranges[i];
    std::vector<std::int64_t> params;
    if (s.kind == ParamKind::p) params = primes_in_range(std::max<std::int64_t>(r.lo, 2), r.hi);
    else
      for (std::int64_t n = r.lo; n <= r.hi; ++n) params.push_back(n);
    const std::size_t variants = variant_count(s.id, plan);
    for (std::int64_t v : params) {
      const bool skipped = skip_reason(s.id, s.kind, v).has_value();
      for (std::size_t j = 0; j < (skipped ? 1 : variants); ++j) plan.cells.push_back({i, v, j});
      // f_n itself for n-statements, f_{p-1} for p-statements; the recurrence check reads f_n directly.
      plan.max_index = std::max(plan.max_index, s.kind == ParamKind::n ? v : v - 1);
    }
  }
  return plan;
}

FamilyTriple triple_for(std::string_view id, const Plan& plan, std::size_t variant) {
  if (id == "conjecture-new1") return kFamilyNew1[variant];
  if (id == "conjecture-new2") return kFamilyNew2[variant];
  return plan.extra_triples[variant];
}

std::vector<Record> run_cell(const Cell& cell, const Plan& plan, const VerificationContext& ctx) {
  const StatementInfo& s = *plan.statements[cell.statement];
  const std::string_view id = s.id;
  const std::int64_t v = cell.param;
  std::vector<Record> out;
  if (auto reason = skip_reason(id, s.kind, v)) {
    out.push_back(skipped_record(std::string(id), param_of(s, v), *reason));
    return out;
  }
  auto add = [&](const auto& report) { out.push_back(to_record(report)); };
  auto add_all = [&](const auto& reports) {
    for (const auto& r : reports) add(r);
  };
  try {
    if (is_identity_id(id)) {
      SweepSpec spec;
      for (int x = -3; x <= 3; ++x) spec.eval_points.emplace_back(x);
      add_all(identity_reports(id, v, spec, ctx));
    } else if (id == "theorem1") add(check_theorem1(v, ctx));
    else if (id == "theorem2") add(check_theorem2(v, ctx));
    else if (id == "theorem3") add(check_theorem3(v, ctx));
    else if (auto aux = parse_auxiliary(id)) add_all(check_auxiliary(*aux, v, ctx));
    else if (id == "reduction-chain") add_all(check_reduction_chain(v, ctx));
    else if (id == "final3-symmetry") add_all(check_final3_symmetry(v, ctx));
    else if (id == "conjecture1") add(check_conjecture1(v, ctx));
    else if (id == "conjecture1-agreement") add(check_conjecture1_agreement(v, ctx));
    else if (id == "conjecture2") add(check_conjecture2(v, ctx));
    else if (id.starts_with("conjecture-new") || id == kFamilyId) add(check_family(triple_for(id, plan, cell.variant), v, ctx));
    else if (id == "third-linear") add(check_third_conjecture(plan.grid[cell.variant], v, ThirdVariant::linear, ctx));
    else if (id == "third-quadratic")
      add(check_third_conjecture(plan.grid[cell.variant], v, ThirdVariant::quadratic, ctx));
    else if (id == "third-crosscheck") {
      const auto variant = cell.variant % 2 == 0 ? ThirdVariant::linear : ThirdVariant::quadratic;
      add(check_third_prime_crosscheck(plan.grid[cell.variant / 2], v, variant, ctx));
    } else if (id == "product-note") {
      const auto a = static_cast<std::int64_t>(cell.variant) + 1;
      for (std::int64_t k = 0; k <= v - 1; ++k) add(check_product_note(v, a, k, ctx));
    } else if (id == "zw-sun-guo") add(check_zw_sun(v, ZwSunVariant::guo, ctx));
    else if (id == "zw-sun-strengthened") add(check_zw_sun(v, ZwSunVariant::strengthened, ctx));
    else throw UsageError("no runner for statement '" + std::string(id) + "'");
  } catch (const std::exception& e) {
    out.clear();
    out.push_back(error_record(std::string(id), param_of(s, v), e.what()));
  }
  return out;
}

FranelTable extend_table(const FranelTable& table, std::int64_t max_index) {
  if (table.max_index() >= max_index) return table;
  std::vector<BigInt> values(table.values().begin(), table.values().end());
  if (values.size() == 1) values.emplace_back(2);
  for (auto n = static_cast<std::int64_t>(values.size()) - 1; n < max_index; ++n)
    values.push_back(franel_recurrence_step(n, values[n], values[n - 1]));
  return FranelTable(std::move(values), Route::recurrence);
}

// The table backing a run: from the cache when one is configured (extended and
// written back if it is too short), otherwise freshly computed.
FranelTable obtain_table(const RunConfig& cfg, std::int64_t max_index) {
  if (!cfg.cache_path) return build_franel_table(max_index, Route::recurrence);
  if (std::filesystem::exists(*cfg.cache_path)) {
    FranelTable cached = load_franel_cache(*cfg.cache_path);
    if (cached.max_index() >= max_index) return cached;
    FranelTable extended = extend_table(cached, max_index);
    store_franel_cache(*cfg.cache_path, extended);
    return extended;
  }
  FranelTable fresh = build_franel_table(max_index, Route::recurrence);
  store_franel_cache(*cfg.cache_path, fresh);
  return fresh;
}

std::vector<std::string> default_sweep_statements(const RunConfig& cfg) {
  std::vector<std::string> ids;
  for (const auto& s : kCatalog)
    if (s.id != kFamilyId || !cfg.extra_triples.empty()) ids.emplace_back(s.id);
  return ids;
}

}  // namespace

Range parse_range(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
      throw UsageError("malformed range '" + std::string(text) + "' (expected a..b)");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const auto v = parse_int(text);
    return {v, v};
  }
  const Range r{parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
  if (r.lo > r.hi) throw UsageError("empty range '" + std::string(text) + "'");
  return r;
}

const std::vector<StatementInfo>& statement_catalog() { return kCatalog; }

const StatementInfo* find_statement(std::string_view id) {
  for (const auto& s : kCatalog)
    if (s.id == id) return &s;
  return nullptr;
}

std::vector<MultiIndexSpec> third_conjecture_grid(int max_m, std::int64_t lo, std::int64_t hi) {
  std::vector<MultiIndexSpec> grid;
  std::vector<MultiIndexSpec> layer{MultiIndexSpec{}};
  for (int m = 1; m <= max_m; ++m) {
    std::vector<MultiIndexSpec> next;
    for (const auto& prefix : layer)
      for (std::int64_t a = lo; a <= hi; ++a) {
        MultiIndexSpec s = prefix;
        s.a.push_back(a);
        next.push_back(std::move(s));
      }
    grid.insert(grid.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return grid;
}

SweepOutcome run_statements(const RunConfig& cfg, const std::vector<std::string>& statements) {
  if (cfg.workers < 1) throw UsageError("--workers must be positive");
  const Plan plan = make_plan(cfg, statements);
  // Arguments of the cached binomials stay below about 4 max_index (third conjecture, a = +-3).
  const VerificationContext ctx(obtain_table(cfg, plan.max_index), std::min<std::int64_t>(1024, 4 * plan.max_index + 8));

  std::vector<std::vector<Record>> results(plan.cells.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < plan.cells.size(); i = next++) results[i] = run_cell(plan.cells[i], plan, ctx);
  };
  {
    std::vector<std::jthread> pool;
    for (int w = 1; w < cfg.workers; ++w) pool.emplace_back(work);
    work();
  }

  SweepOutcome outcome;
  outcome.summary.per_statement.reserve(plan.statements.size());
  for (const auto* s : plan.statements) outcome.summary.per_statement.emplace_back(std::string(s->id), Counts{});
  for (std::size_t i = 0; i < plan.cells.size(); ++i) {
    Counts& counts = outcome.summary.per_statement[plan.cells[i].statement].second;
    for (auto& r : results[i]) {
      tally(counts, r);
      outcome.records.push_back(std::move(r));
    }
  }
  return outcome;
}

namespace {

const Record* first_failure(const std::vector<Record>& records) {
  for (const auto& r : records)
    if (r.verdict == Verdict::fail && !r.informational) return &r;
  return nullptr;
}

}  // namespace

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.statements.empty()) throw UsageError("verify needs --statements");
  const SweepOutcome outcome = run_statements(cfg, cfg.statements);
  for (const auto& r : outcome.records) out << format_record(r, cfg.format) << '\n';
  const Counts total = outcome.summary.total();
  err << "verify: " << total.pass << " pass, " << total.fail << " fail, " << total.skipped << " skipped, "
      << total.informational << " informational\n";
  if (const Record* bad = first_failure(outcome.records)) {
    err << "FIRST FAILURE: " << format_record(*bad, cfg.format) << '\n';
    return kExitFail;
  }
  return kExitPass;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto ids = cfg.statements.empty() ? default_sweep_statements(cfg) : cfg.statements;
  const SweepOutcome outcome = run_statements(cfg, ids);
  if (cfg.emit_records)
    for (const auto& r : outcome.records) out << format_record(r, cfg.format) << '\n';
  out << format_summary(outcome.summary, cfg.format) << '\n';
  if (const Record* bad = first_failure(outcome.records)) {
    err << "FIRST FAILURE: " << format_record(*bad, cfg.format) << '\n';
    return kExitFail;
  }
  return kExitPass;
}

int cmd_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.n_range) throw UsageError("compute needs --n-range");
  const Range r = *cfg.n_range;
  if (r.lo < 0) throw UsageError("compute: n-range must be nonnegative");
  const std::vector<Route> routes = cfg.routes.empty() ? std::vector<Route>{Route::recurrence} : cfg.routes;
  if (cfg.cross_check && routes.size() < 2) throw UsageError("--cross-check needs at least two --route values");

  BinomialProvider binom;
  std::vector<FranelTable> tables;
  for (Route route : routes) tables.push_back(build_franel_table(r.hi, route, binom));

  int status = kExitPass;
  if (cfg.cross_check) {
    for (std::size_t i = 1; i < tables.size(); ++i)
      for (std::int64_t n = r.lo; n <= r.hi; ++n)
        if (tables[i][n] != tables[0][n]) {
          err << "route disagreement at n=" << n << ": " << route_name(routes[0]) << "=" << tables[0][n].get_str()
              << " " << route_name(routes[i]) << "=" << tables[i][n].get_str() << '\n';
          status = kExitFail;
          break;
        }
  }

  if (cfg.cache_path) {
    std::optional<FranelTable> cached;
    if (std::filesystem::exists(*cfg.cache_path)) cached = load_franel_cache(*cfg.cache_path);
    if (cached) {
      const std::int64_t overlap = std::min(cached->max_index(), r.hi);
      for (std::int64_t n = 0; n <= overlap; ++n)
        if ((*cached)[n] != tables[0][n]) {
          err << "cache disagrees with route " << route_name(routes[0]) << " at n=" << n << '\n';
          return kExitFail;
        }
    }
    if (!cached || cached->max_index() < r.hi)
      store_franel_cache(*cfg.cache_path, extend_table(cached ? *cached : tables[0], r.hi));
  }

  for (std::int64_t n = r.lo; n <= r.hi; ++n) {
    if (cfg.format == Format::tsv) {
      out << n << '\t' << tables[0][n].get_str() << '\n';
    } else {
      out << R"({"n":)" << n << R"(,"f":")" << tables[0][n].get_str() << R"(","route":")" << route_name(routes[0])
          << "\"}\n";
    }
  }
  return status;
}

int cmd_cache(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.cache_path) throw UsageError("cache needs --cache <path>");
  const std::int64_t target = cfg.n_range ? cfg.n_range->hi : 0;
  const FranelTable table = obtain_table(cfg, target);
  out << R"({"cache":")" << cfg.cache_path->string() << R"(","N":)" << table.max_index()
      << R"(,"status":"valid"})" << '\n';
  (void)err;
  return kExitPass;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.command) {
      case Command::compute: return cmd_compute(cfg, out, err);
      case Command::verify: return cmd_verify(cfg, out, err);
      case Command::sweep: return cmd_sweep(cfg, out, err);
      case Command::cache: return cmd_cache(cfg, out, err);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CacheError& e) {
    err << "cache error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "filesystem error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace franel

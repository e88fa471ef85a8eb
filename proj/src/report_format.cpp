#include "franel/report_format.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace franel {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped: return "skipped";
  }
  return "?";
}

Record to_record(const IdentityReport& r) {
  Record out;
  out.statement = r.id;
  out.params = r.params;
  out.lhs = r.lhs.get_str();
  out.rhs = r.rhs.get_str();
  out.verdict = r.pass ? Verdict::pass : Verdict::fail;
  out.note = r.note;
  return out;
}

Record to_record(const CongruenceReport& r) {
  Record out;
  out.statement = r.id;
  out.params = r.params;
  out.modulus = r.modulus().get_str();
  out.lhs = r.lhs.value().get_str();
  out.rhs = r.rhs.value().get_str();
  out.verdict = r.pass ? Verdict::pass : Verdict::fail;
  if (r.witness) out.witness = r.witness->get_str();
  out.note = r.note;
  out.informational = r.note.find("informational") != std::string::npos;
  return out;
}

Record skipped_record(std::string statement, Params params, std::string reason) {
  Record out;
  out.statement = std::move(statement);
  out.params = std::move(params);
  out.verdict = Verdict::skipped;
  out.skipped_reason = std::move(reason);
  return out;
}

Record error_record(std::string statement, Params params, std::string what) {
  Record out;
  out.statement = std::move(statement);
  out.params = std::move(params);
  out.verdict = Verdict::fail;
  out.note = "error: " + what;
  return out;
}

std::optional<Format> parse_format(std::string_view name) {
  if (name == "json-lines") return Format::json_lines;
  if (name == "tsv") return Format::tsv;
  return std::nullopt;
}

namespace {

std::string tsv_field(const std::optional<std::string>& s) { return s && !s->empty() ? *s : "-"; }

}  // namespace

std::string format_record(const Record& r, Format f) {
  if (f == Format::json_lines) {
    nlohmann::ordered_json j;
    j["statement"] = r.statement;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& p : r.params) params[p.name] = p.value;
    j["params"] = params;
    j["modulus"] = r.modulus ? nlohmann::ordered_json(*r.modulus) : nlohmann::ordered_json(nullptr);
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["verdict"] = verdict_name(r.verdict);
    if (r.witness) j["witness"] = *r.witness;
    if (r.skipped_reason) j["skipped_reason"] = *r.skipped_reason;
    if (!r.note.empty()) j["note"] = r.note;
    if (r.informational) j["informational"] = true;
    return j.dump();
  }
  std::ostringstream params;
  for (std::size_t i = 0; i < r.params.size(); ++i)
    params << (i ? ";" : "") << r.params[i].name << '=' << r.params[i].value;
  std::ostringstream out;
  out << r.statement << '\t' << (r.params.empty() ? "-" : params.str()) << '\t' << tsv_field(r.modulus) << '\t'
      << (r.lhs.empty() ? "-" : r.lhs) << '\t' << (r.rhs.empty() ? "-" : r.rhs) << '\t' << verdict_name(r.verdict)
      << '\t' << tsv_field(r.witness) << '\t'
      << tsv_field(r.skipped_reason ? r.skipped_reason : std::optional<std::string>(r.note));
  return out.str();
}

void tally(Counts& c, const Record& r) {
  if (r.verdict == Verdict::skipped) ++c.skipped;
  else if (r.informational) ++c.informational;
  else if (r.verdict == Verdict::pass) ++c.pass;
  else ++c.fail;
}

Counts Summary::total() const {
  Counts t;
  for (const auto& [_, c] : per_statement) {
    t.pass += c.pass;
    t.fail += c.fail;
    t.skipped += c.skipped;
    t.informational += c.informational;
  }
  return t;
}

std::string format_summary(const Summary& s, Format f) {
  auto counts_json = [](const Counts& c) {
    nlohmann::ordered_json j;
    j["pass"] = c.pass;
    j["fail"] = c.fail;
    j["skipped"] = c.skipped;
    j["informational"] = c.informational;
    return j;
  };
  if (f == Format::json_lines) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json per = nlohmann::ordered_json::object();
    for (const auto& [id, c] : s.per_statement) per[id] = counts_json(c);
    j["summary"] = per;
    j["total"] = counts_json(s.total());
    j["verdict"] = s.all_pass() ? "pass" : "fail";
    return j.dump();
  }
  std::ostringstream out;
  auto line = [&](const std::string& id, const Counts& c) {
    out << "summary\t" << id << "\tpass=" << c.pass << "\tfail=" << c.fail << "\tskipped=" << c.skipped
        << "\tinformational=" << c.informational << '\n';
  };
  for (const auto& [id, c] : s.per_statement) line(id, c);
  line("total", s.total());
  std::string text = out.str();
  text.pop_back();
  return text;
}

}  // namespace franel

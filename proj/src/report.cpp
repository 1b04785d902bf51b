#include "holomult/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace hlm {

namespace {

using Json = nlohmann::ordered_json;

Json to_json(const DerivedValue& v) {
  return std::visit([](const auto& x) { return Json(x); }, v);
}

std::string to_text(const DerivedValue& v) {
  struct Visitor {
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int64_t k) const { return std::to_string(k); }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(const std::vector<std::string>& list) const {
      std::string out = "[";
      for (std::size_t k = 0; k < list.size(); ++k) out += (k ? ", " : "") + list[k];
      return out + "]";
    }
  };
  return std::visit(Visitor{}, v);
}

std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

std::string emit_json(const Report& r, bool timing) {
  Json doc;
  doc["schema"] = "holomult.report/1";
  doc["seed"] = r.seed;
  Json tasks = Json::array();
  for (const auto& t : r.tasks) {
    Json rec;
    rec["id"] = t.id;
    rec["kind"] = t.kind;
    rec["verdict"] = to_string(t.verdict);
    rec["residual"] = {{"zero", t.residual_zero}, {"leading", t.residual}};
    Json derived = Json::object();
    for (const auto& [key, value] : t.derived) derived[key] = to_json(value);
    rec["derived"] = std::move(derived);
    if (timing) rec["elapsed_ms"] = t.elapsed_ms;
    tasks.push_back(std::move(rec));
  }
  doc["tasks"] = std::move(tasks);
  const std::size_t passed = r.passed();
  doc["summary"] = {{"total", r.tasks.size()}, {"passed", passed}, {"failed", r.tasks.size() - passed}};
  return doc.dump(2) + "\n";
}

std::string emit_text(const Report& r, bool timing) {
  std::ostringstream out;
  std::size_t id_width = 2, kind_width = 4;
  for (const auto& t : r.tasks) {
    id_width = std::max(id_width, t.id.size());
    kind_width = std::max(kind_width, t.kind.size());
  }
  for (const auto& t : r.tasks) {
    std::string verdict = to_string(t.verdict);
    std::transform(verdict.begin(), verdict.end(), verdict.begin(), [](unsigned char c) { return std::toupper(c); });
    out << t.id << std::string(id_width - t.id.size() + 2, ' ') << t.kind
        << std::string(kind_width - t.kind.size() + 2, ' ') << verdict;
    if (timing) out << "  (" << format_ms(t.elapsed_ms) << " ms)";
    out << "\n";
    out << "    residual: " << (t.residual_zero ? "0" : t.residual) << "\n";
    for (const auto& [key, value] : t.derived) out << "    " << key << ": " << to_text(value) << "\n";
  }
  const std::size_t passed = r.passed();
  out << r.tasks.size() << " task" << (r.tasks.size() == 1 ? "" : "s") << ", " << passed << " passed, "
      << r.tasks.size() - passed << " failed\n";
  return out.str();
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::found:
      return "found";
    case Verdict::inconsistent:
      return "inconsistent";
  }
  return "fail";
}

std::size_t Report::passed() const {
  return static_cast<std::size_t>(std::count_if(tasks.begin(), tasks.end(), [](const TaskRecord& t) { return t.ok(); }));
}

std::string emit_report(const Report& r, ReportFormat format, bool timing) {
  return format == ReportFormat::json ? emit_json(r, timing) : emit_text(r, timing);
}

}  // namespace hlm

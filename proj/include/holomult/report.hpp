#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "holomult/manifest.hpp"

namespace hlm {

enum class Verdict { pass, fail, found, inconsistent };

const char* to_string(Verdict v);

using DerivedValue = std::variant<bool, std::int64_t, std::string, std::vector<std::string>>;

struct TaskRecord {
  std::string id;
  std::string kind;
  Verdict verdict = Verdict::fail;
  bool residual_zero = false;
  std::string residual;  // leading terms; "0" when zero
  std::vector<std::pair<std::string, DerivedValue>> derived;
  double elapsed_ms = 0.0;

  bool ok() const { return verdict == Verdict::pass || verdict == Verdict::found; }
};

struct Report {
  std::uint64_t seed = 0;
  std::vector<TaskRecord> tasks;  // manifest order

  std::size_t passed() const;
  // 0 when every task passed (or found), 1 otherwise.
  int exit_code() const { return passed() == tasks.size() ? 0 : 1; }
};

// Runs every task in order. A library error inside a task is rethrown as a
// ParseError positioned at the task line.
Report run_tasks(const Manifest& m, std::uint64_t seed);

enum class ReportFormat { text, json };

// Deterministic rendering; timings appear only when `timing` is set.
std::string emit_report(const Report& r, ReportFormat format, bool timing = false);

}  // namespace hlm

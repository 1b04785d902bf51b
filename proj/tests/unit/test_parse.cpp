#include <fstream>

#include "doctest.h"
#include "holomult/manifest.hpp"
#include "holomult/report.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace hlm;
using oracle::E;

namespace {

ParseError parse_error(const std::string& text) {
  try {
    parse_manifest(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("manifest parsed without error");
  return ParseError("", 0, 0);
}

ParseError expr_error(const std::string& text, std::size_t n) {
  try {
    parse_expr(text, n);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expression parsed without error: " << text);
  return ParseError("", 0, 0);
}

const char* kCubic = R"([dim]
3
[poly]
C = (z1)^2 + (z2)^2 + (z3)^2 - z1*z2*z3
[bivector P]
1 2 = 2*z3 - z1*z2
1 3 = z1*z3 - 2*z2
2 3 = 2*z1 - z2*z3
[task]
lm: bivector_lm alpha=C
self: self_multiplier_random count=5 degree=2
)";

}  // namespace

TEST_SUITE("parse") {
  TEST_CASE("parse_expr examples") {
    const CPoly b = parse_expr("z1*z3 - 2*z2", 3);
    CHECK(b == oracle::sub(oracle::mul(CPoly::variable(3, 0), CPoly::variable(3, 2)),
                           CPoly::variable(3, 1).scaled(GaussRat(2))));
    CHECK(parse_expr("(z1)^2 + 4*z2*z3", 3) == parse_expr("z1*z1 + 4 * z3 * z2", 3));
    CHECK(parse_expr("i^2 + 1", 1).is_zero());
    CHECK(parse_expr("  -z1 +\t(1/2 + i)*z1^0 ", 1) == parse_expr("1/2 + i - z1", 1));
    CHECK(parse_expr("0.25*z1", 1) == parse_expr("1/4*z1", 1));
    CHECK(parse_expr("(z1 + z2)^3", 2) == parse_expr("z1^3 + 3*z1^2*z2 + 3*z1*z2^2 + z2^3", 2));
    CHECK(parse_constant("-(3/6) + 2*i") == GaussRat(Rational(-1, 2), Rational(2)));
    NameTable names;
    names.emplace("q", parse_expr("z1 + 1", 1));
    CHECK(parse_expr("q^2 - 1", 1, names) == parse_expr("z1^2 + 2*z1", 1));
  }

  TEST_CASE("parse_expr errors carry positions") {
    auto e = expr_error("2 z1", 1);
    CHECK(e.line() == 1);
    CHECK(e.column() == 3);
    e = expr_error("z4 + 1", 3);
    CHECK(e.column() == 1);
    e = expr_error("z1^-2", 1);
    CHECK(e.column() == 4);
    e = expr_error("z1 + sqrt(2)", 1);
    CHECK(e.column() == 6);
    e = expr_error("z1 * (z1 + 1", 1);
    CHECK(e.column() == 6);
    CHECK(e.message().find("unbalanced") != std::string::npos);
    e = expr_error("1/0", 1);
    CHECK(e.line() == 1);
    e = expr_error("", 1);
    CHECK(e.column() == 1);
    e = expr_error("z1 )", 1);
    CHECK(e.column() == 4);
    CHECK_THROWS_AS(parse_expr("z0", 2), ParseError);
    CHECK_THROWS_AS(parse_constant("z1"), ParseError);
    const ParseError shifted = [] {
      try {
        parse_expr("z1 + ?", 1, SourcePos{7, 10});
      } catch (const ParseError& err) {
        return err;
      }
      return ParseError("", 0, 0);
    }();
    CHECK(shifted.line() == 7);
    CHECK(shifted.column() == 15);
  }

  TEST_CASE("canonical text round trip") {
    oracle::Gen gen(120);
    for (int k = 0; k < 200; ++k) {
      const std::size_t n = static_cast<std::size_t>(gen.integer(1, 4));
      const CPoly p = gen.poly(n, 4, 6);
      CHECK(parse_expr(to_string(p), n) == p);
    }
  }

  TEST_CASE("manifest sections") {
    const Manifest m = parse_manifest(kCubic);
    CHECK(m.dim == 3);
    CHECK(m.volume_weight == GaussRat(1));
    CHECK(m.polys.count("C") == 1);
    CHECK(m.bivectors.count("P") == 1);
    REQUIRE(m.tasks.size() == 2);
    CHECK(m.tasks[0].id == "lm");
    CHECK(m.tasks[0].kind == "bivector_lm");
    CHECK(m.tasks[0].line == 10);
    CHECK(m.tasks[1].integers.at("count") == 5);
    const auto kinds = task_kinds();
    CHECK(std::find(kinds.begin(), kinds.end(), "thlm") != kinds.end());

    const Manifest w = parse_manifest("[dim]\n2\n[volume]\n1/2 + i\n[field]\nZ = z2, -z1 # rotation\n");
    CHECK(w.volume_weight == GaussRat(Rational(1, 2), Rational(1)));
    CHECK(w.fields.at("Z") == oracle::F({"z2", "-z1"}));
  }

  TEST_CASE("manifest errors") {
    auto e = parse_error("[dim]\n3\n[task]\nt: first_integral field=Q f=\"z1\"\n");
    CHECK(e.line() == 4);
    CHECK(e.message().find("undefined field 'Q'") != std::string::npos);

    e = parse_error("[dim]\n2\n[field]\nZ = z1, z2, z3\n");
    CHECK(e.line() == 4);

    e = parse_error("[dim]\n2\n[poly]\nf = z3\n");
    CHECK(e.line() == 4);
    CHECK(e.column() == 5);

    e = parse_error("[dim]\n2\n[task]\nt: frobnicate\n");
    CHECK(e.line() == 4);
    CHECK(e.message().find("frobnicate") != std::string::npos);

    e = parse_error("[poly]\nf = z1\n");
    CHECK(e.line() == 1);

    e = parse_error("[dim]\n2\n[bivector]\n2 1 = z1\n");
    CHECK(e.line() == 4);

    e = parse_error("[dim]\n2\n[metric]\n1, 0\n0, 2\n");
    CHECK(e.line() == 3);

    e = parse_error("[dim]\n2\n[volume]\n0\n");
    CHECK(e.line() == 4);

    e = parse_error("[dim]\n2\n[poly]\nf = z1\nf = z2\n");
    CHECK(e.line() == 5);

    e = parse_error("[dim]\n2\n[task]\nt: jacobi\n");
    CHECK(e.line() == 4);

    e = parse_error("[dim]\n2\n[widgets]\n");
    CHECK(e.line() == 3);
  }

  TEST_CASE("empty task list gives an empty passing report") {
    const Report r = run_tasks(parse_manifest("[dim]\n1\n"), 1);
    CHECK(r.tasks.empty());
    CHECK(r.exit_code() == 0);
    const auto j = nlohmann::json::parse(emit_report(r, ReportFormat::json));
    CHECK(j["tasks"].empty());
    CHECK(j["summary"]["total"] == 0);
  }

  TEST_CASE("report contents and determinism") {
    const Manifest m = parse_manifest(kCubic);
    const std::string a = emit_report(run_tasks(m, 7), ReportFormat::json);
    const std::string b = emit_report(run_tasks(m, 7), ReportFormat::json);
    CHECK(a == b);
    const auto j = nlohmann::json::parse(a);
    CHECK(j["schema"] == "holomult.report/1");
    CHECK(j["seed"] == 7);
    REQUIRE(j["tasks"].size() == 2);
    CHECK(j["tasks"][0]["id"] == "lm");
    CHECK(j["tasks"][0]["verdict"] == "pass");
    CHECK(j["tasks"][0]["residual"]["zero"] == true);
    CHECK_FALSE(j["tasks"][0].contains("elapsed_ms"));
    CHECK(j["summary"]["failed"] == 0);
    const auto timed = nlohmann::json::parse(emit_report(run_tasks(m, 7), ReportFormat::json, true));
    CHECK(timed["tasks"][0].contains("elapsed_ms"));

    const std::string text = emit_report(run_tasks(m, 7), ReportFormat::text);
    CHECK(text.find("2 tasks, 2 passed, 0 failed") != std::string::npos);
  }

  TEST_CASE("failing and found verdicts") {
    const Manifest m = parse_manifest(R"([dim]
1
[field]
Z = z1
[task]
neg: last_multiplier field=Z alpha=z1
search: darboux_search field=Z candidates="z1"
)");
    const Report r = run_tasks(m, 0);
    REQUIRE(r.tasks.size() == 2);
    CHECK(r.tasks[0].verdict == Verdict::fail);
    CHECK_FALSE(r.tasks[0].residual_zero);
    CHECK(r.tasks[0].residual == "2*z1");
    CHECK(r.tasks[1].verdict == Verdict::found);
    CHECK(r.exit_code() == 1);
  }

  TEST_CASE("load_manifest reads files") {
    const std::string path = "holomult_test_manifest.hlm";
    {
      std::ofstream out(path);
      out << kCubic;
    }
    CHECK(load_manifest(path).tasks.size() == 2);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_manifest("no/such/file.hlm"), Error);
  }
}

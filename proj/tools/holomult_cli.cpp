// Command-line front end. Uses only the C interface.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "holomult/holomult.h"
#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitInput = 2;

struct Options {
  std::size_t dim = 0;
  std::vector<std::string> fields;
  std::vector<std::string> polys;
  std::string alpha;
  std::string bivector;
  std::string volume_weight;
  std::uint64_t seed = 0;
  double step = 1e-3;
  double t_end = 1.0;
  std::string x0;
  std::string format = "text";
  std::string out;
  bool timing = false;
  std::string manifest;
};

// Thrown for any input problem; main prints it and exits with 2.
struct InputError {
  std::string message;
};

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Context = std::unique_ptr<hm_context, Deleter<hm_context, hm_context_free>>;
using Poly = std::unique_ptr<hm_poly, Deleter<hm_poly, hm_poly_free>>;
using Field = std::unique_ptr<hm_field, Deleter<hm_field, hm_field_free>>;
using Biv = std::unique_ptr<hm_bivector, Deleter<hm_bivector, hm_bivector_free>>;
using Manifest = std::unique_ptr<hm_manifest, Deleter<hm_manifest, hm_manifest_free>>;
using Report = std::unique_ptr<hm_report, Deleter<hm_report, hm_report_free>>;
using Traj = std::unique_ptr<hm_trajectory, Deleter<hm_trajectory, hm_trajectory_free>>;

class Session {
public:
  explicit Session(const Options& o) : o_(o), ctx_(hm_context_new()) {
    if (!ctx_) throw InputError{"out of memory"};
  }

  hm_context* ctx() const { return ctx_.get(); }

  void check(hm_status s, const std::string& what) const {
    if (s == HM_OK) return;
    std::string msg = what;
    if (hm_last_error_line(ctx()) > 0)
      msg += ":" + std::to_string(hm_last_error_line(ctx())) + ":" + std::to_string(hm_last_error_column(ctx()));
    throw InputError{msg + ": error: " + hm_last_error(ctx())};
  }

  std::string take(char* s) const {
    std::string out(s);
    hm_string_free(s);
    return out;
  }

  std::size_t dim() const {
    if (o_.dim == 0) throw InputError{"--dim is required"};
    return o_.dim;
  }

  const char* weight() const { return o_.volume_weight.empty() ? nullptr : o_.volume_weight.c_str(); }

  Poly poly(const std::string& text, const std::string& flag) const {
    hm_poly* p = nullptr;
    check(hm_poly_parse(ctx(), text.c_str(), dim(), &p), flag);
    return Poly(p);
  }

  Field field(const std::string& text, const std::string& flag) const {
    hm_field* f = nullptr;
    check(hm_field_parse(ctx(), text.c_str(), dim(), &f), flag);
    return Field(f);
  }

  Biv bivector() const {
    if (o_.bivector.empty()) throw InputError{"--bivector is required"};
    hm_bivector* b = nullptr;
    check(hm_bivector_parse(ctx(), o_.bivector.c_str(), dim(), &b), "--bivector");
    return Biv(b);
  }

  std::string str(const hm_poly* p) const {
    char* s = nullptr;
    check(hm_poly_to_string(ctx(), p, &s), "poly");
    return take(s);
  }

  std::string str(const hm_field* f) const {
    char* s = nullptr;
    check(hm_field_to_string(ctx(), f, &s), "field");
    return take(s);
  }

private:
  const Options& o_;
  Context ctx_;
};

void write_output(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw InputError{"cannot write '" + o.out + "'"};
  f << text;
}

// Key/value results rendered as aligned text or a flat json object.
void emit(const Options& o, const std::vector<std::pair<std::string, Json>>& rows) {
  if (o.format == "json") {
    Json doc = Json::object();
    for (const auto& [k, v] : rows) doc[k] = v;
    write_output(o, doc.dump(2) + "\n");
    return;
  }
  std::string text;
  for (const auto& [k, v] : rows) text += k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
  write_output(o, text);
}

int run_check(const Options& o) {
  Session s(o);
  hm_manifest* m = nullptr;
  s.check(hm_manifest_load_file(s.ctx(), o.manifest.c_str(), &m), o.manifest);
  Manifest manifest(m);
  hm_report* r = nullptr;
  s.check(hm_run(s.ctx(), manifest.get(), o.seed, &r), o.manifest);
  Report report(r);
  char* text = nullptr;
  s.check(hm_report_render(s.ctx(), report.get(), o.format == "json" ? HM_FORMAT_JSON : HM_FORMAT_TEXT,
                           o.timing ? 1 : 0, &text),
          o.manifest);
  write_output(o, s.take(text));
  return hm_report_exit_code(report.get());
}

int run_div(const Options& o) {
  Session s(o);
  if (o.fields.size() != 1) throw InputError{"div takes exactly one --field"};
  const Field z = s.field(o.fields[0], "--field");
  hm_poly* d = nullptr;
  s.check(hm_divergence(s.ctx(), z.get(), s.weight(), &d), "div");
  const Poly div(d);
  std::vector<std::pair<std::string, Json>> rows = {{"divergence", s.str(div.get())}};
  int code = 0;
  if (!o.alpha.empty()) {
    const Poly alpha = s.poly(o.alpha, "--alpha");
    int holds = 0;
    hm_poly* r = nullptr;
    s.check(hm_last_multiplier(s.ctx(), z.get(), alpha.get(), s.weight(), &holds, &r), "--alpha");
    const Poly residual(r);
    rows.emplace_back("last_multiplier", holds != 0);
    rows.emplace_back("residual", s.str(residual.get()));
    code = holds ? 0 : 1;
  }
  emit(o, rows);
  return code;
}

int run_bracket(const Options& o) {
  Session s(o);
  if (!o.bivector.empty()) {
    if (o.polys.size() != 2) throw InputError{"bracket with --bivector takes two --poly"};
    const Biv p = s.bivector();
    const Poly f = s.poly(o.polys[0], "--poly");
    const Poly g = s.poly(o.polys[1], "--poly");
    hm_poly* out = nullptr;
    s.check(hm_poisson_bracket(s.ctx(), f.get(), g.get(), p.get(), &out), "bracket");
    const Poly b(out);
    emit(o, {{"poisson_bracket", s.str(b.get())}});
    return 0;
  }
  if (o.fields.size() != 2) throw InputError{"bracket takes two --field (or --bivector and two --poly)"};
  const Field z = s.field(o.fields[0], "--field");
  const Field w = s.field(o.fields[1], "--field");
  hm_field* out = nullptr;
  s.check(hm_lie_bracket(s.ctx(), z.get(), w.get(), &out), "bracket");
  const Field b(out);
  emit(o, {{"lie_bracket", s.str(b.get())}});
  return 0;
}

int run_curl(const Options& o) {
  Session s(o);
  const Biv p = s.bivector();
  hm_field* out = nullptr;
  s.check(hm_curl(s.ctx(), p.get(), s.weight(), &out), "curl");
  const Field c(out);
  emit(o, {{"curl", s.str(c.get())}, {"exact", hm_field_is_zero(c.get()) != 0}});
  return 0;
}

int run_modular(const Options& o) {
  Session s(o);
  const Biv p = s.bivector();
  hm_field* out = nullptr;
  s.check(hm_modular(s.ctx(), p.get(), s.weight(), &out), "modular");
  const Field m(out);
  std::vector<std::pair<std::string, Json>> rows = {{"modular_field", s.str(m.get())},
                                                    {"zero", hm_field_is_zero(m.get()) != 0}};
  int code = 0;
  if (!o.alpha.empty()) {
    const Poly alpha = s.poly(o.alpha, "--alpha");
    int holds = 0;
    hm_field* r = nullptr;
    s.check(hm_bivector_lm(s.ctx(), alpha.get(), p.get(), s.weight(), &holds, &r), "--alpha");
    const Field residual(r);
    rows.emplace_back("bivector_last_multiplier", holds != 0);
    rows.emplace_back("residual", s.str(residual.get()));
    code = holds ? 0 : 1;
  }
  emit(o, rows);
  return code;
}

int run_realify(const Options& o) {
  Session s(o);
  std::string text;
  for (const auto& src : o.polys) {
    const Poly p = s.poly(src, "--poly");
    char* out = nullptr;
    s.check(hm_realify_poly(s.ctx(), p.get(), &out), "realify");
    text += s.take(out);
  }
  for (const auto& src : o.fields) {
    const Field z = s.field(src, "--field");
    char* out = nullptr;
    s.check(hm_realify_field(s.ctx(), z.get(), &out), "realify");
    text += s.take(out);
  }
  if (o.polys.empty() && o.fields.empty()) throw InputError{"realify needs --poly or --field"};
  if (o.format == "json") {
    Json lines = Json::array();
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    write_output(o, Json{{"realified", lines}}.dump(2) + "\n");
  } else {
    write_output(o, text);
  }
  return 0;
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError{"--x0: '" + item + "' is not a number"};
    }
  }
  return out;
}

int run_integrate(const Options& o) {
  Session s(o);
  if (o.fields.size() != 1) throw InputError{"integrate takes exactly one --field"};
  const Field z = s.field(o.fields[0], "--field");
  const auto x0 = parse_doubles(o.x0);
  hm_trajectory* t = nullptr;
  s.check(hm_integrate(s.ctx(), z.get(), x0.data(), x0.size(), o.t_end, o.step, &t), "integrate");
  const Traj traj(t);
  const std::size_t n = hm_trajectory_size(traj.get()), d = hm_trajectory_dim(traj.get());
  std::vector<double> last(d);
  hm_trajectory_state(traj.get(), n - 1, last.data());

  Json result;
  result["steps"] = n - 1;
  result["t_final"] = hm_trajectory_time(traj.get(), n - 1);
  result["truncated"] = hm_trajectory_truncated(traj.get()) != 0;
  result["final_state"] = last;
  for (const auto& src : o.polys) {
    const Poly f = s.poly(src, "--poly");
    double re = 0, im = 0;
    s.check(hm_trajectory_drift(s.ctx(), traj.get(), f.get(), &re, &im), "--poly");
    result["drift"].push_back({{"poly", s.str(f.get())}, {"re", re}, {"im", im}});
  }
  if (o.format == "json") {
    write_output(o, result.dump(2) + "\n");
    return 0;
  }
  std::ostringstream text;
  text.precision(17);
  text << "steps: " << n - 1 << "\nt_final: " << result["t_final"].get<double>()
       << "\ntruncated: " << (result["truncated"].get<bool>() ? "true" : "false") << "\nfinal_state:";
  for (const double v : last) text << " " << v;
  text << "\n";
  if (result.contains("drift"))
    for (const auto& d : result["drift"])
      text << "drift " << d["poly"].get<std::string>() << ": re " << d["re"].get<double>() << ", im "
           << d["im"].get<double>() << "\n";
  write_output(o, text.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of holomorphic last multipliers and Poisson structures"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", o.out, "Write output to this file");
  };
  auto ambient = [&](CLI::App* sub) {
    sub->add_option("--dim", o.dim, "Number of complex variables z1..zn")->check(CLI::Range(1, 16));
    sub->add_option("--volume-weight", o.volume_weight, "Constant c in c dz1^...^dzn (default 1)");
  };

  auto* check = app.add_subcommand("check", "Run the tasks of a manifest");
  check->add_option("manifest", o.manifest, "Manifest file")->required();
  check->add_option("--seed", o.seed, "Seed for randomized tasks");
  check->add_flag("--timing", o.timing, "Include per-task timings");
  common(check);

  auto* div = app.add_subcommand("div", "Divergence of a field; with --alpha, the last-multiplier check");
  ambient(div);
  div->add_option("--field", o.fields, "Comma-separated components")->required();
  div->add_option("--alpha", o.alpha, "Candidate last multiplier");
  common(div);

  auto* bracket = app.add_subcommand("bracket", "Lie bracket of two fields, or Poisson bracket of two polynomials");
  ambient(bracket);
  bracket->add_option("--field", o.fields, "Field (give twice)");
  bracket->add_option("--poly", o.polys, "Polynomial (give twice, with --bivector)");
  bracket->add_option("--bivector", o.bivector, "Entries 'i j = expr' separated by ';'");
  common(bracket);

  auto* curl = app.add_subcommand("curl", "Curl of a bivector");
  ambient(curl);
  curl->add_option("--bivector", o.bivector, "Entries 'i j = expr' separated by ';'")->required();
  common(curl);

  auto* modular = app.add_subcommand("modular", "Modular field; with --alpha, the bivector last-multiplier check");
  ambient(modular);
  modular->add_option("--bivector", o.bivector, "Entries 'i j = expr' separated by ';'")->required();
  modular->add_option("--alpha", o.alpha, "Candidate last multiplier");
  common(modular);

  auto* realify = app.add_subcommand("realify", "Real and imaginary parts in x1..xn, y1..yn");
  ambient(realify);
  realify->add_option("--poly", o.polys, "Polynomial");
  realify->add_option("--field", o.fields, "Field");
  common(realify);

  auto* integrate = app.add_subcommand("integrate", "RK4 along the real flow of a holomorphic field");
  ambient(integrate);
  integrate->add_option("--field", o.fields, "Field")->required();
  integrate->add_option("--x0", o.x0, "Initial point x1..xn,y1..yn")->required();
  integrate->add_option("--step", o.step, "Step size");
  integrate->add_option("--t-end", o.t_end, "Final time");
  integrate->add_option("--poly", o.polys, "Report the drift of this polynomial");
  common(integrate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (check->parsed()) return run_check(o);
    if (div->parsed()) return run_div(o);
    if (bracket->parsed()) return run_bracket(o);
    if (curl->parsed()) return run_curl(o);
    if (modular->parsed()) return run_modular(o);
    if (realify->parsed()) return run_realify(o);
    if (integrate->parsed()) return run_integrate(o);
  } catch (const InputError& e) {
    std::cerr << e.message << "\n";
    return kExitInput;
  }
  return kExitInput;
}

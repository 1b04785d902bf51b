#include "holomult/manifest.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace hlm {

namespace {

constexpr std::size_t kMaxDim = 16;

enum class ArgType { poly, poly_list, field, field_list, bivector, metric, integer, word, matrix, point };

struct ArgSpec {
  const char* key;
  ArgType type;
  bool required;
};

struct KindSpec {
  const char* kind;
  std::vector<ArgSpec> args;
};

const std::vector<KindSpec>& kind_table() {
  using T = ArgType;
  static const std::vector<KindSpec> table = {
      {"first_integral", {{"field", T::field, true}, {"f", T::poly, true}}},
      {"last_multiplier", {{"field", T::field, true}, {"alpha", T::poly, true}}},
      {"inverse_multiplier", {{"field", T::field, true}, {"beta", T::poly, true}}},
      {"darboux_cofactor", {{"field", T::field, true}, {"f", T::poly, true}}},
      {"darboux_search", {{"field", T::field, true}, {"candidates", T::poly_list, true}}},
      {"symmetry", {{"field", T::field, true}, {"symmetry", T::field, true}}},
      {"inverse_from_symmetries", {{"field", T::field, true}, {"symmetries", T::field_list, true}}},
      {"inverse_from_frame",
       {{"field", T::field, true},
        {"frame", T::field_list, true},
        {"structure", T::matrix, true},
        {"expect", T::poly, false}}},
      {"divergence_type", {{"field", T::field, true}, {"w", T::field, true}}},
      {"conformal", {{"field", T::field, true}, {"f", T::poly, true}}},
      {"jacobi", {{"bivector", T::bivector, false}}},
      {"modular", {{"bivector", T::bivector, false}}},
      {"unimodular", {{"bivector", T::bivector, false}, {"h", T::poly, true}}},
      {"self_multiplier", {{"bivector", T::bivector, false}, {"f", T::poly, true}}},
      {"self_multiplier_random",
       {{"bivector", T::bivector, false}, {"count", T::integer, false}, {"degree", T::integer, false}}},
      {"hamiltonian_lm",
       {{"bivector", T::bivector, false}, {"alpha", T::poly, true}, {"f", T::poly, true}, {"h", T::poly, false}}},
      {"casimir", {{"bivector", T::bivector, false}, {"f", T::poly, true}}},
      {"exact", {{"bivector", T::bivector, false}}},
      {"bivector_lm", {{"bivector", T::bivector, false}, {"alpha", T::poly, true}}},
      {"dim4_exact", {{"bivector", T::bivector, false}, {"point", T::point, false}}},
      {"exact_hamiltonian", {{"bivector", T::bivector, false}, {"h", T::poly, true}}},
      {"gradient_lm", {{"metric", T::metric, false}, {"alpha", T::poly, true}, {"f", T::poly, true}}},
      {"harmonic", {{"metric", T::metric, false}, {"f", T::poly, true}}},
      {"thlm", {{"field", T::field, true}, {"alpha", T::poly, true}, {"expect", T::word, false}}},
      {"tg",
       {{"metric", T::metric, false}, {"alpha", T::poly, true}, {"f", T::poly, true}, {"expect", T::word, false}}},
      {"th1",
       {{"bivector", T::bivector, false},
        {"alpha", T::poly, true},
        {"f", T::poly, true},
        {"expect", T::word, false}}},
      {"th2", {{"bivector", T::bivector, false}, {"f", T::poly, true}, {"expect", T::word, false}}},
  };
  return table;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

// Names the expression grammar already owns.
bool is_reserved(std::string_view s) {
  if (s == "i") return true;
  return s.size() >= 2 && s[0] == 'z' && s.substr(1).find_first_not_of("0123456789") == std::string_view::npos;
}

// A slice of the current line with its 1-based starting column.
struct Piece {
  std::string text;
  std::size_t column = 1;
};

Piece trim(const Piece& p) {
  const auto b = p.text.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {"", p.column + p.text.size()};
  const auto e = p.text.find_last_not_of(" \t\r");
  return {p.text.substr(b, e - b + 1), p.column + b};
}

// Splits on `sep` outside parentheses.
std::vector<Piece> split(const Piece& p, char sep) {
  std::vector<Piece> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= p.text.size(); ++k) {
    const char c = k < p.text.size() ? p.text[k] : sep;
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth <= 0) {
      out.push_back(trim({p.text.substr(start, k - start), p.column + start}));
      start = k + 1;
    }
  }
  return out;
}

class Loader {
public:
  Manifest run(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_;
      Piece content = trim({strip_comment(raw), 1});
      if (content.text.empty()) continue;
      if (content.text.front() == '[') {
        open_section(content);
        continue;
      }
      if (section_.empty()) fail(content.column, "content outside of any section");
      if (section_ == "dim") dim_line(content);
      else if (section_ == "volume") volume_line(content);
      else if (section_ == "poly") poly_line(content);
      else if (section_ == "field") field_line(content);
      else if (section_ == "bivector") bivector_line(content);
      else if (section_ == "metric") metric_line(content);
      else task_line(content);
    }
    finish_metric();
    return std::move(m_);
  }

private:
  [[noreturn]] void fail(std::size_t column, const std::string& msg) const { throw ParseError(msg, line_, column); }

  SourcePos at(const Piece& p) const { return {line_, p.column}; }

  static std::string strip_comment(const std::string& raw) {
    bool quoted = false;
    for (std::size_t k = 0; k < raw.size(); ++k) {
      if (raw[k] == '"') quoted = !quoted;
      if (raw[k] == '#' && !quoted) return raw.substr(0, k);
    }
    return raw;
  }

  void need_dim(std::size_t column) const {
    if (m_.dim == 0) fail(column, "the [dim] section must come first");
  }

  void open_section(const Piece& p) {
    finish_metric();
    if (p.text.back() != ']') fail(p.column + p.text.size() - 1, "expected ']' to close the section header");
    const Piece inner = trim({p.text.substr(1, p.text.size() - 2), p.column + 1});
    const auto space = inner.text.find_first_of(" \t");
    const std::string name = inner.text.substr(0, space);
    std::string label;
    std::size_t label_col = inner.column;
    if (space != std::string::npos) {
      const Piece rest = trim({inner.text.substr(space), inner.column + space});
      label = rest.text;
      label_col = rest.column;
    }
    static const std::set<std::string> known = {"dim", "volume", "poly", "field", "bivector", "metric", "task"};
    if (!known.count(name)) fail(inner.column, "unknown section '" + name + "'");
    if (name != "dim") need_dim(inner.column);
    if (name == "dim" && m_.dim != 0) fail(inner.column, "duplicate [dim] section");
    if (!label.empty() && name != "bivector" && name != "metric")
      fail(label_col, "section [" + name + "] takes no name");
    if (name == "bivector" && m_.dim < 2) fail(inner.column, "a bivector needs dimension >= 2");
    if (name == "bivector" || name == "metric") {
      if (label.empty()) label = name == "bivector" ? "P" : "g";
      if (!is_identifier(label) || is_reserved(label)) fail(label_col, "invalid name '" + label + "'");
      declare(label, label_col);
    }
    section_ = name;
    label_ = label;
    if (name == "bivector") m_.bivectors.emplace(label, Bivector(m_.dim));
    if (name == "metric") {
      metric_rows_.clear();
      metric_line_ = line_;
      metric_col_ = label_col;
    }
    seen_in_section_ = 0;
  }

  void declare(const std::string& name, std::size_t column) {
    if (!names_.insert(name).second) fail(column, "duplicate name '" + name + "'");
  }

  void dim_line(const Piece& p) {
    if (seen_in_section_++ > 0) fail(p.column, "[dim] takes a single integer");
    if (p.text.find_first_not_of("0123456789") != std::string::npos || p.text.size() > 3)
      fail(p.column, "dimension must be a positive integer");
    const std::size_t n = std::stoul(p.text);
    if (n == 0 || n > kMaxDim) fail(p.column, "dimension must be between 1 and " + std::to_string(kMaxDim));
    m_.dim = n;
  }

  void volume_line(const Piece& p) {
    if (seen_in_section_++ > 0) fail(p.column, "[volume] takes a single constant");
    const GaussRat w = parse_constant(p.text, at(p));
    if (w.is_zero()) fail(p.column, "volume weight must be nonzero");
    m_.volume_weight = w;
  }

  // Splits "name = rhs"; checks the name.
  std::pair<Piece, Piece> assignment(const Piece& p) {
    const auto eq = p.text.find('=');
    if (eq == std::string::npos) fail(p.column, "expected 'name = value'");
    const Piece lhs = trim({p.text.substr(0, eq), p.column});
    const Piece rhs = trim({p.text.substr(eq + 1), p.column + eq + 1});
    if (rhs.text.empty()) fail(rhs.column, "missing value after '='");
    return {lhs, rhs};
  }

  void check_new_name(const Piece& name) {
    if (!is_identifier(name.text)) fail(name.column, "invalid name '" + name.text + "'");
    if (is_reserved(name.text)) fail(name.column, "'" + name.text + "' is reserved for the unit or a coordinate");
    declare(name.text, name.column);
  }

  void poly_line(const Piece& p) {
    auto [lhs, rhs] = assignment(p);
    check_new_name(lhs);
    m_.polys.emplace(lhs.text, parse_expr(rhs.text, m_.dim, m_.polys, at(rhs)));
  }

  VectorField field_from(const Piece& rhs) {
    const auto parts = split(rhs, ',');
    if (parts.size() != m_.dim)
      fail(rhs.column, "dimension mismatch: field has " + std::to_string(parts.size()) + " components, [dim] is " +
                           std::to_string(m_.dim));
    std::vector<CPoly> comps;
    for (const auto& part : parts) comps.push_back(parse_expr(part.text, m_.dim, m_.polys, at(part)));
    return VectorField(std::move(comps));
  }

  void field_line(const Piece& p) {
    auto [lhs, rhs] = assignment(p);
    check_new_name(lhs);
    m_.fields.emplace(lhs.text, field_from(rhs));
  }

  void bivector_line(const Piece& p) {
    auto [lhs, rhs] = assignment(p);
    std::istringstream idx(lhs.text);
    long i = 0, j = 0;
    std::string extra;
    if (!(idx >> i >> j) || (idx >> extra)) fail(lhs.column, "expected two indices 'i j'");
    if (i < 1 || j < 1 || static_cast<std::size_t>(i) > m_.dim || static_cast<std::size_t>(j) > m_.dim)
      fail(lhs.column, "index out of range 1.." + std::to_string(m_.dim));
    if (i >= j) fail(lhs.column, "bivector entries are given for i < j only");
    const auto key = std::make_pair(i, j);
    if (!bivector_entries_[label_].insert(key).second)
      fail(lhs.column, "duplicate entry " + std::to_string(i) + " " + std::to_string(j));
    m_.bivectors.at(label_).add(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1),
                                parse_expr(rhs.text, m_.dim, m_.polys, at(rhs)));
  }

  void metric_line(const Piece& p) {
    const auto parts = split(p, ',');
    if (parts.size() != m_.dim)
      fail(p.column, "dimension mismatch: metric row has " + std::to_string(parts.size()) + " entries, [dim] is " +
                         std::to_string(m_.dim));
    if (metric_rows_.size() == m_.dim) fail(p.column, "metric has more than " + std::to_string(m_.dim) + " rows");
    GaussVector row;
    for (const auto& part : parts) row.push_back(parse_constant(part.text, at(part)));
    metric_rows_.push_back(std::move(row));
  }

  void finish_metric() {
    if (section_ != "metric") return;
    section_.clear();
    if (metric_rows_.size() != m_.dim)
      throw ParseError("metric '" + label_ + "' has " + std::to_string(metric_rows_.size()) + " rows, expected " +
                           std::to_string(m_.dim),
                       metric_line_, metric_col_);
    try {
      m_.metrics.emplace(label_, HoloMetric(metric_rows_));
    } catch (const Error& e) {
      throw ParseError(e.what(), metric_line_, metric_col_);
    }
  }

  // --- tasks ---

  struct KeyValue {
    Piece key;
    Piece value;
    bool quoted = false;
  };

  std::vector<KeyValue> key_values(const Piece& p) {
    std::vector<KeyValue> out;
    const std::string& s = p.text;
    std::size_t k = 0;
    auto skip = [&] {
      while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k]))) ++k;
    };
    for (skip(); k < s.size(); skip()) {
      const std::size_t kstart = k;
      while (k < s.size() && s[k] != '=' && !std::isspace(static_cast<unsigned char>(s[k]))) ++k;
      if (k >= s.size() || s[k] != '=') fail(p.column + kstart, "expected key=value");
      KeyValue kv;
      kv.key = {s.substr(kstart, k - kstart), p.column + kstart};
      ++k;
      if (k < s.size() && s[k] == '"') {
        const auto close = s.find('"', k + 1);
        if (close == std::string::npos) fail(p.column + k, "unterminated '\"'");
        kv.value = {s.substr(k + 1, close - k - 1), p.column + k + 1};
        kv.quoted = true;
        k = close + 1;
      } else {
        const std::size_t vstart = k;
        while (k < s.size() && !std::isspace(static_cast<unsigned char>(s[k]))) ++k;
        kv.value = {s.substr(vstart, k - vstart), p.column + vstart};
      }
      if (kv.value.text.empty() && !kv.quoted) fail(kv.value.column, "missing value for '" + kv.key.text + "'");
      out.push_back(std::move(kv));
    }
    return out;
  }

  CPoly poly_value(const Piece& v) {
    if (is_identifier(v.text) && !is_reserved(v.text)) {
      const auto it = m_.polys.find(v.text);
      if (it == m_.polys.end()) fail(v.column, "undefined polynomial '" + v.text + "'");
      return it->second;
    }
    return parse_expr(v.text, m_.dim, m_.polys, at(v));
  }

  VectorField field_value(const KeyValue& kv) {
    if (kv.quoted) return field_from(kv.value);
    const auto it = m_.fields.find(kv.value.text);
    if (it == m_.fields.end()) fail(kv.value.column, "undefined field '" + kv.value.text + "'");
    return it->second;
  }

  VectorField field_name(const Piece& v) {
    const auto it = m_.fields.find(v.text);
    if (it == m_.fields.end()) fail(v.column, "undefined field '" + v.text + "'");
    return it->second;
  }

  void task_line(const Piece& p) {
    const auto colon = p.text.find(':');
    if (colon == std::string::npos) fail(p.column, "expected 'id: kind key=value ...'");
    const Piece id = trim({p.text.substr(0, colon), p.column});
    if (!is_identifier(id.text)) fail(id.column, "invalid task id '" + id.text + "'");
    if (!task_ids_.insert(id.text).second) fail(id.column, "duplicate task id '" + id.text + "'");
    const Piece rest = trim({p.text.substr(colon + 1), p.column + colon + 1});
    const auto sp = rest.text.find_first_of(" \t");
    const Piece kind{rest.text.substr(0, sp), rest.column};
    if (kind.text.empty()) fail(rest.column, "missing task kind");
    const auto& table = kind_table();
    const auto spec = std::find_if(table.begin(), table.end(), [&](const KindSpec& k) { return kind.text == k.kind; });
    if (spec == table.end()) fail(kind.column, "unknown task kind '" + kind.text + "'");

    Task t;
    t.id = id.text;
    t.kind = kind.text;
    t.line = line_;
    std::set<std::string> given;
    const Piece args = sp == std::string::npos ? Piece{"", rest.column + rest.text.size()}
                                               : Piece{rest.text.substr(sp), rest.column + sp};
    for (const auto& kv : key_values(args)) {
      const auto arg = std::find_if(spec->args.begin(), spec->args.end(),
                                    [&](const ArgSpec& a) { return kv.key.text == a.key; });
      if (arg == spec->args.end())
        fail(kv.key.column, "task kind '" + t.kind + "' has no argument '" + kv.key.text + "'");
      if (!given.insert(kv.key.text).second) fail(kv.key.column, "argument '" + kv.key.text + "' given twice");
      resolve(t, *arg, kv);
    }
    for (const auto& a : spec->args) {
      if (given.count(a.key)) continue;
      if (a.required) fail(kind.column, "task kind '" + t.kind + "' needs argument '" + a.key + "'");
      default_arg(t, a, kind.column);
    }
    m_.tasks.push_back(std::move(t));
  }

  void resolve(Task& t, const ArgSpec& a, const KeyValue& kv) {
    const Piece& v = kv.value;
    switch (a.type) {
      case ArgType::poly:
        t.polys[a.key] = {poly_value(v)};
        break;
      case ArgType::poly_list: {
        auto& list = t.polys[a.key];
        for (const auto& item : split(v, ',')) list.push_back(poly_value(item));
        break;
      }
      case ArgType::field:
        t.fields[a.key] = {field_value(kv)};
        break;
      case ArgType::field_list: {
        auto& list = t.fields[a.key];
        for (const auto& item : split(v, ',')) list.push_back(field_name(item));
        break;
      }
      case ArgType::bivector: {
        const auto it = m_.bivectors.find(v.text);
        if (it == m_.bivectors.end()) fail(v.column, "undefined bivector '" + v.text + "'");
        t.bivector = it->second;
        break;
      }
      case ArgType::metric: {
        if (v.text == "euclidean") {
          t.metric = HoloMetric::euclidean(m_.dim);
          break;
        }
        const auto it = m_.metrics.find(v.text);
        if (it == m_.metrics.end()) fail(v.column, "undefined metric '" + v.text + "'");
        t.metric = it->second;
        break;
      }
      case ArgType::integer: {
        if (v.text.empty() || v.text.size() > 6 || v.text.find_first_not_of("0123456789") != std::string::npos)
          fail(v.column, "expected a nonnegative integer below 10^6");
        t.integers[a.key] = std::stol(v.text);
        break;
      }
      case ArgType::word:
        if (v.text != "zero" && v.text != "nonzero") fail(v.column, "expected 'zero' or 'nonzero'");
        t.words[a.key] = v.text;
        break;
      case ArgType::matrix: {
        for (const auto& row : split(v, ';')) {
          std::vector<CPoly> r;
          for (const auto& item : split(row, ',')) r.push_back(poly_value(item));
          t.matrix.push_back(std::move(r));
        }
        break;
      }
      case ArgType::point: {
        const auto items = split(v, ',');
        if (items.size() != m_.dim)
          fail(v.column, "dimension mismatch: point has " + std::to_string(items.size()) + " coordinates, [dim] is " +
                             std::to_string(m_.dim));
        std::vector<GaussRat> pt;
        for (const auto& item : items) pt.push_back(parse_constant(item.text, at(item)));
        t.point = std::move(pt);
        break;
      }
    }
  }

  void default_arg(Task& t, const ArgSpec& a, std::size_t column) {
    switch (a.type) {
      case ArgType::bivector: {
        const auto it = m_.bivectors.find("P");
        if (it == m_.bivectors.end())
          fail(column, "task kind '" + t.kind + "' needs bivector=NAME (no bivector named P)");
        t.bivector = it->second;
        break;
      }
      case ArgType::metric: {
        const auto it = m_.metrics.find("g");
        t.metric = it == m_.metrics.end() ? HoloMetric::euclidean(m_.dim) : it->second;
        break;
      }
      case ArgType::integer:
        t.integers[a.key] = std::string(a.key) == "count" ? 20 : 3;
        break;
      case ArgType::word:
        t.words[a.key] = "zero";
        break;
      default:
        break;
    }
  }

  Manifest m_;
  std::size_t line_ = 0;
  std::string section_;
  std::string label_;
  std::size_t seen_in_section_ = 0;
  std::set<std::string> names_;
  std::set<std::string> task_ids_;
  std::map<std::string, std::set<std::pair<long, long>>> bivector_entries_;
  GaussMatrix metric_rows_;
  std::size_t metric_line_ = 0;
  std::size_t metric_col_ = 1;
};

}  // namespace

Manifest parse_manifest(const std::string& text) { return Loader().run(text); }

Manifest load_manifest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read manifest '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_manifest(buf.str());
}

std::vector<std::string> task_kinds() {
  std::vector<std::string> out;
  for (const auto& k : kind_table()) out.emplace_back(k.kind);
  return out;
}

}  // namespace hlm

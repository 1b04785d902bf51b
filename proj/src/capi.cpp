#include "holomult/holomult.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "holomult/manifest.hpp"
#include "holomult/numcheck.hpp"
#include "holomult/realify.hpp"
#include "holomult/report.hpp"

struct hm_context {
  std::string error;
  std::size_t line = 0;
  std::size_t column = 0;
};

struct hm_manifest {
  hlm::Manifest m;
};
struct hm_report {
  hlm::Report r;
};
struct hm_poly {
  hlm::CPoly p;
};
struct hm_field {
  hlm::VectorField z;
};
struct hm_bivector {
  hlm::Bivector b;
};
struct hm_trajectory {
  hlm::Trajectory t;
  std::size_t dim = 0;
};

namespace {

hm_status fail(hm_context* ctx, hm_status s, const std::string& msg, std::size_t line = 0, std::size_t column = 0) {
  if (ctx) {
    ctx->error = msg;
    ctx->line = line;
    ctx->column = column;
  }
  return s;
}

// Runs f, mapping library exceptions to status codes.
template <class F>
hm_status guarded(hm_context* ctx, F&& f) {
  if (!ctx) return HM_ERR_ARGUMENT;
  ctx->error.clear();
  ctx->line = ctx->column = 0;
  try {
    return f();
  } catch (const hlm::ParseError& e) {
    return fail(ctx, HM_ERR_PARSE, e.message(), e.line(), e.column());
  } catch (const hlm::DimensionError& e) {
    return fail(ctx, HM_ERR_DIMENSION, e.what());
  } catch (const hlm::DomainError& e) {
    return fail(ctx, HM_ERR_DOMAIN, e.what());
  } catch (const hlm::Error& e) {
    return fail(ctx, HM_ERR_IO, e.what());
  } catch (const hlm::InvariantViolation& e) {
    return fail(ctx, HM_ERR_INTERNAL, std::string("internal check failed: ") + e.what());
  } catch (const std::bad_alloc&) {
    return fail(ctx, HM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ctx, HM_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

hlm::VolumeForm volume(std::size_t n, const char* weight) {
  if (!weight) return hlm::VolumeForm(n);
  const hlm::GaussRat w = hlm::parse_constant(weight);
  if (w.is_zero()) throw hlm::DomainError("volume weight must be nonzero");
  return hlm::VolumeForm(n, w);
}

struct Slice {
  std::string text;
  std::size_t column;
};

// Splits on `sep` outside parentheses, keeping 1-based start columns.
std::vector<Slice> split(const std::string& s, char sep) {
  std::vector<Slice> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= s.size(); ++k) {
    const char c = k < s.size() ? s[k] : sep;
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth <= 0) {
      out.push_back({s.substr(start, k - start), start + 1});
      start = k + 1;
    }
  }
  return out;
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r\n") == std::string::npos; }

std::string field_string(const hlm::VectorField& z) {
  std::string out = "(";
  for (std::size_t k = 0; k < z.dim(); ++k) out += (k ? ", " : "") + hlm::to_string(z[k]);
  return out + ")";
}

}  // namespace

extern "C" {

const char* hm_version(void) { return "0.1.0"; }

hm_context* hm_context_new(void) { return new (std::nothrow) hm_context(); }
void hm_context_free(hm_context* ctx) { delete ctx; }
const char* hm_last_error(const hm_context* ctx) { return ctx ? ctx->error.c_str() : ""; }
size_t hm_last_error_line(const hm_context* ctx) { return ctx ? ctx->line : 0; }
size_t hm_last_error_column(const hm_context* ctx) { return ctx ? ctx->column : 0; }
void hm_string_free(char* s) { std::free(s); }

hm_status hm_manifest_load_file(hm_context* ctx, const char* path, hm_manifest** out) {
  return guarded(ctx, [&] {
    if (!path || !out) return fail(ctx, HM_ERR_ARGUMENT, "null argument");
    std::ifstream in(path, std::ios::binary);
    if (!in) return fail(ctx, HM_ERR_IO, std::string("cannot read manifest '") + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    *out = new hm_manifest{hlm::parse_manifest(buf.str())};
    return HM_OK;
  });
}

hm_status hm_manifest_load_string(hm_context* ctx, const char* text, hm_manifest** out) {
  return guarded(ctx, [&] {
    if (!text || !out) return fail(ctx, HM_ERR_ARGUMENT, "null argument");
    *out = new hm_manifest{hlm::parse_manifest(text)};
    return HM_OK;
  });
}

size_t hm_manifest_task_count(const hm_manifest* m) { return m ? m->m.tasks.size() : 0; }
void hm_manifest_free(hm_manifest* m) { delete m; }

hm_status hm_run(hm_context* ctx, const hm_manifest* m, uint64_t seed, hm_report** out) {
  return guarded(ctx, [&] {
    if (!m || !out) return fail(ctx, HM_ERR_ARGUMENT, "null argument");
    *out = new hm_report{hlm::run_tasks(m->m, seed)};
    return HM_OK;
  });
}

int hm_report_exit_code(const hm_report* r) { return r ? r->r.exit_code() : 2; }

hm_status hm_report_render(hm_context* ctx, const hm_report* r, hm_format format, int timing, char** out) {
  return guarded(ctx, [&] {
    if (!r || !out) return fail(ctx, HM_ERR_ARGUMENT, "null argument");
    if (format != HM_FORMAT_TEXT && format != HM_FORMAT_JSON) return fail(ctx, HM_ERR_ARGUMENT, "unknown format");
    const auto f = format == HM_FORMAT_JSON ? hlm::ReportFormat::json : hlm::ReportFormat::text;
    *out = dup_string(hlm::emit_report(r->r, f, timing != 0));
    return HM_OK;
  });
}

void hm_report_free(hm_report* r) { delete r; }

hm_status hm_poly_parse(hm_context* ctx, const char* text, size_t n, hm_poly** out) {
  return guarded(ctx, [&] {
    if (!text || !out) return fail(ctx, HM_ERR_ARGUMENT, "null argument");
    *out = new hm_poly{hlm::parse_expr(text, n)};
    return HM_OK;
  });
}

hm_status hm_poly_to_string(hm_context* ctx, const hm_poly* p, char** out) {
  return guarded(ctx, [&] {
    if (!p || !out) return fail(ctx, HM_ERR_ARGUMENT, "null argument");
    *out = dup_string(hlm::to_string(p->p));
    return HM_OK;
  });
}

int hm_poly_is_zero(const hm_poly* p) { return p && p->p.is_zero(); }
void hm_poly_free(hm_poly* p) { delete p; }

hm_status hm_field_parse(hm_context* ctx, const char* text, size_t n, hm_field** out) {
  return guarded(ctx, [&] {
    if (!text || !out) return fail(ctx, HM_ERR_ARGUMENT, "null argument");
    const auto parts = split(text, ',');
    if (parts.size() != n)
      return fail(ctx, HM_ERR_DIMENSION,
                  "field has " + std::to_string(parts.size()) + " components, expected " + std::to_string(n));
    std::vector<hlm::CPoly> comps;
    for (const auto& s : parts) comps.push_back(hlm::parse_expr(s.text, n, {1, s.column}));
    *out = new hm_field{hlm::VectorField(std::move(comps))};
    return HM_OK;
  });
}

hm_status hm_field_to_string(hm_context* ctx, const hm_field* f, char** out) {
  return guarded(ctx, [&] {
    if (!f || !out) return fail(ctx, HM_ERR_ARGUMENT, "null argument");
    *out = dup_string(field_string(f->z));
    return HM_OK;
  });
}

int hm_field_is_zero(const hm_field* f) { return f && f->z.is_zero(); }
void hm_field_free(hm_field* f) { delete f; }

hm_status hm_bivector_parse(hm_context* ctx, const char* text, size_t n, hm_bivector** out) {
  return guarded(ctx, [&] {
    if (!text || !out) return fail(ctx, HM_ERR_ARGUMENT, "null argument");
    if (n < 2) return fail(ctx, HM_ERR_DOMAIN, "a bivector needs dimension >= 2");
    hlm::Bivector b(n);
    for (const auto& entry : split(text, ';')) {
      if (blank(entry.text)) continue;
      const auto eq = entry.text.find('=');
      if (eq == std::string::npos) throw hlm::ParseError("expected 'i j = expr'", 1, entry.column);
      std::istringstream idx(entry.text.substr(0, eq));
      long i = 0, j = 0;
      std::string extra;
      if (!(idx >> i >> j) || (idx >> extra)) throw hlm::ParseError("expected two indices 'i j'", 1, entry.column);
      if (i < 1 || j <= i || static_cast<std::size_t>(j) > n)
        throw hlm::ParseError("indices must satisfy 1 <= i < j <= " + std::to_string(n), 1, entry.column);
      b.add(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1),
            hlm::parse_expr(entry.text.substr(eq + 1), n, {1, entry.column + eq + 1}));
    }
    *out = new hm_bivector{std::move(b)};
    return HM_OK;
  });
}

void hm_bivector_free(hm_bivector* b) { delete b; }

hm_status hm_divergence(hm_context* ctx, const hm_field* z, const char* volume_weight, hm_poly** out) {
  return guarded(ctx, [&] {
    if (!z || !out) return fail(ctx, HM_ERR_ARGUMENT, "null argument");
    *out = new hm_poly{hlm::divergence(z->z, volume(z->z.dim(), volume_weight))};
    return HM_OK;
  });
}

hm_status hm_lie_bracket(hm_context* ctx, const hm_field* z, const hm_field* w, hm_field** out) {
  return guarded(ctx, [&] {
    if (!z || !w || !out) return fail(ctx, HM_ERR_ARGUMENT, "null argument");
    *out = new hm_field{hlm::lie_bracket(z->z, w->z)};
    return HM_OK;
  });
}

hm_status hm_poisson_bracket(hm_context* ctx, const hm_poly* f, const hm_poly* g, const hm_bivector* p,
                             hm_poly** out) {
  return guarded(ctx, [&] {
    if (!f || !g || !p || !out) return fail(ctx, HM_ERR_ARGUMENT, "null argument");
    *out = new hm_poly{hlm::poisson_bracket(f->p, g->p, p->b)};
    return HM_OK;
  });
}

hm_status hm_curl(hm_context* ctx, const hm_bivector* p, const char* volume_weight, hm_field** out) {
  return guarded(ctx, [&] {
    if (!p || !out) return fail(ctx, HM_ERR_ARGUMENT, "null argument");
    const auto c = hlm::curl(p->b.as_multivector(), volume(p->b.dim(), volume_weight));
    *out = new hm_field{hlm::to_field(c)};
    return HM_OK;
  });
}

hm_status hm_modular(hm_context* ctx, const hm_bivector* p, const char* volume_weight, hm_field** out) {
  return guarded(ctx, [&] {
    if (!p || !out) return fail(ctx, HM_ERR_ARGUMENT, "null argument");
    *out = new hm_field{hlm::modular_field(p->b, volume(p->b.dim(), volume_weight))};
    return HM_OK;
  });
}

hm_status hm_last_multiplier(hm_context* ctx, const hm_field* z, const hm_poly* alpha, const char* volume_weight,
                             int* holds, hm_poly** residual) {
  return guarded(ctx, [&] {
    if (!z || !alpha || !holds) return fail(ctx, HM_ERR_ARGUMENT, "null argument");
    const auto c = hlm::is_last_multiplier(alpha->p, z->z, volume(z->z.dim(), volume_weight));
    *holds = c.holds ? 1 : 0;
    if (residual) *residual = new hm_poly{c.residual};
    return HM_OK;
  });
}

hm_status hm_bivector_lm(hm_context* ctx, const hm_poly* alpha, const hm_bivector* p, const char* volume_weight,
                         int* holds, hm_field** residual) {
  return guarded(ctx, [&] {
    if (!alpha || !p || !holds) return fail(ctx, HM_ERR_ARGUMENT, "null argument");
    const auto c = hlm::bivector_lm_check(alpha->p, p->b, volume(p->b.dim(), volume_weight));
    *holds = c.holds ? 1 : 0;
    if (residual) *residual = new hm_field{c.residual};
    return HM_OK;
  });
}

hm_status hm_realify_poly(hm_context* ctx, const hm_poly* p, char** out) {
  return guarded(ctx, [&] {
    if (!p || !out) return fail(ctx, HM_ERR_ARGUMENT, "null argument");
    const auto s = hlm::realify_split(p->p);
    *out = dup_string("re: " + hlm::to_string(s.re) + "\nim: " + hlm::to_string(s.im) + "\n");
    return HM_OK;
  });
}

hm_status hm_realify_field(hm_context* ctx, const hm_field* z, char** out) {
  return guarded(ctx, [&] {
    if (!z || !out) return fail(ctx, HM_ERR_ARGUMENT, "null argument");
    const auto pair = hlm::realify_field(z->z);
    const std::size_t n = z->z.dim();
    std::string text;
    auto emit = [&](const char* name, const hlm::RealVectorField& X) {
      for (std::size_t a = 0; a < X.dim(); ++a) {
        const std::string var = (a < n ? "x" : "y") + std::to_string(a % n + 1);
        text += std::string(name) + "[d/d" + var + "] = " + hlm::to_string(X[a]) + "\n";
      }
    };
    emit("Z_R", pair.Z);
    emit("W_R", pair.W);
    *out = dup_string(text);
    return HM_OK;
  });
}

hm_status hm_integrate(hm_context* ctx, const hm_field* z, const double* x0, size_t len, double t_end, double step,
                       hm_trajectory** out) {
  return guarded(ctx, [&] {
    if (!z || !x0 || !out) return fail(ctx, HM_ERR_ARGUMENT, "null argument");
    const auto real = hlm::realify_field(z->z).Z;
    const std::vector<double> start(x0, x0 + len);
    *out = new hm_trajectory{hlm::integrate(real, start, t_end, step), real.dim()};
    return HM_OK;
  });
}

size_t hm_trajectory_size(const hm_trajectory* t) { return t ? t->t.states.size() : 0; }
size_t hm_trajectory_dim(const hm_trajectory* t) { return t ? t->dim : 0; }
int hm_trajectory_truncated(const hm_trajectory* t) { return t && t->t.truncated; }
double hm_trajectory_time(const hm_trajectory* t, size_t k) {
  return t && k < t->t.times.size() ? t->t.times[k] : 0.0;
}

hm_status hm_trajectory_state(const hm_trajectory* t, size_t k, double* out) {
  if (!t || !out || k >= t->t.states.size()) return HM_ERR_ARGUMENT;
  std::copy(t->t.states[k].begin(), t->t.states[k].end(), out);
  return HM_OK;
}

hm_status hm_trajectory_drift(hm_context* ctx, const hm_trajectory* t, const hm_poly* f, double* re_drift,
                              double* im_drift) {
  return guarded(ctx, [&] {
    if (!t || !f || !re_drift || !im_drift) return fail(ctx, HM_ERR_ARGUMENT, "null argument");
    if (2 * f->p.nvars() != t->dim)
      return fail(ctx, HM_ERR_DIMENSION, "polynomial and trajectory dimensions disagree");
    const auto s = hlm::realify_split(f->p);
    *re_drift = hlm::first_integral_drift(s.re, t->t);
    *im_drift = hlm::first_integral_drift(s.im, t->t);
    return HM_OK;
  });
}

void hm_trajectory_free(hm_trajectory* t) { delete t; }

}  // extern "C"

/* Exercises the shared library through its C header only. */
#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "holomult/holomult.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static const char* kManifest =
    "[dim]\n3\n"
    "[bivector P]\n1 2 = 2*z3 - z1*z2\n1 3 = z1*z3 - 2*z2\n2 3 = 2*z1 - z2*z3\n"
    "[task]\nlm: bivector_lm alpha=\"z1^2 + z2^2 + z3^2 - z1*z2*z3\"\n";

/* `sp` is read after the call that fills it has run. */
static int expect_string(hm_context* ctx, hm_status st, char** sp, const char* want) {
  char* s = *sp;
  int ok = st == HM_OK && s && strcmp(s, want) == 0;
  if (!ok) fprintf(stderr, "got '%s' (status %d, %s), want '%s'\n", s ? s : "(null)", (int)st, hm_last_error(ctx), want);
  hm_string_free(s);
  *sp = NULL;
  return ok;
}

static void test_polys(hm_context* ctx) {
  hm_poly *f = NULL, *g = NULL, *h = NULL;
  char* s = NULL;
  EXPECT(hm_poly_parse(ctx, "z1 + i*z2^2", 2, &f) == HM_OK);
  EXPECT(hm_poly_parse(ctx, "i^2 + 1", 2, &g) == HM_OK);
  EXPECT(hm_poly_is_zero(g));
  EXPECT(!hm_poly_is_zero(f));
  s = NULL;
  EXPECT(expect_string(ctx, hm_poly_to_string(ctx, f, &s), &s, "i*z2^2 + z1"));

  EXPECT(hm_poly_parse(ctx, "2 z1", 2, &h) == HM_ERR_PARSE);
  EXPECT(h == NULL);
  EXPECT(hm_last_error_line(ctx) == 1);
  EXPECT(hm_last_error_column(ctx) == 3);
  EXPECT(strlen(hm_last_error(ctx)) > 0);
  EXPECT(hm_poly_parse(ctx, "z3", 2, &h) == HM_ERR_PARSE);
  EXPECT(hm_poly_parse(ctx, NULL, 2, &h) == HM_ERR_ARGUMENT);

  s = NULL;
  EXPECT(hm_realify_poly(ctx, f, &s) == HM_OK);
  EXPECT(s && strstr(s, "re: ") == s);
  hm_string_free(s);
  hm_poly_free(f);
  hm_poly_free(g);
}

static void test_fields(hm_context* ctx) {
  hm_field *z = NULL, *w = NULL, *b = NULL;
  hm_poly *d = NULL, *alpha = NULL, *res = NULL;
  char* s = NULL;
  int holds = -1;
  EXPECT(hm_field_parse(ctx, "z1", 1, &z) == HM_OK);
  EXPECT(hm_field_parse(ctx, "z1^2", 1, &w) == HM_OK);
  EXPECT(hm_divergence(ctx, z, NULL, &d) == HM_OK);
  EXPECT(expect_string(ctx, hm_poly_to_string(ctx, d, &s), &s, "1"));
  hm_poly_free(d);

  EXPECT(hm_lie_bracket(ctx, z, w, &b) == HM_OK);
  s = NULL;
  EXPECT(expect_string(ctx, hm_field_to_string(ctx, b, &s), &s, "(z1^2)"));
  hm_field_free(b);

  EXPECT(hm_poly_parse(ctx, "z1", 1, &alpha) == HM_OK);
  EXPECT(hm_last_multiplier(ctx, z, alpha, "2", &holds, &res) == HM_OK);
  EXPECT(holds == 0);
  s = NULL;
  EXPECT(expect_string(ctx, hm_poly_to_string(ctx, res, &s), &s, "2*z1"));
  hm_poly_free(res);

  EXPECT(hm_divergence(ctx, z, "0", &d) == HM_ERR_DOMAIN);
  EXPECT(hm_field_parse(ctx, "z1, z2", 1, &b) != HM_OK);
  hm_poly_free(alpha);
  hm_field_free(z);
  hm_field_free(w);
}

static void test_bivectors(hm_context* ctx) {
  hm_bivector *p = NULL, *bad = NULL;
  hm_poly *f = NULL, *g = NULL, *br = NULL, *cas = NULL;
  hm_field *curl = NULL, *mod = NULL, *res = NULL;
  char* s = NULL;
  int holds = -1;
  EXPECT(hm_bivector_parse(ctx, "1 2 = 2*z2; 1 3 = -2*z3; 2 3 = z1", 3, &p) == HM_OK);
  EXPECT(hm_poly_parse(ctx, "z1", 3, &f) == HM_OK);
  EXPECT(hm_poly_parse(ctx, "z2", 3, &g) == HM_OK);
  EXPECT(hm_poisson_bracket(ctx, f, g, p, &br) == HM_OK);
  EXPECT(expect_string(ctx, hm_poly_to_string(ctx, br, &s), &s, "2*z2"));
  EXPECT(hm_curl(ctx, p, NULL, &curl) == HM_OK);
  EXPECT(hm_field_is_zero(curl));
  EXPECT(hm_modular(ctx, p, NULL, &mod) == HM_OK);
  EXPECT(hm_field_is_zero(mod));
  EXPECT(hm_poly_parse(ctx, "z1^2 + 4*z2*z3", 3, &cas) == HM_OK);
  EXPECT(hm_bivector_lm(ctx, cas, p, NULL, &holds, &res) == HM_OK);
  EXPECT(holds == 1);
  EXPECT(hm_field_is_zero(res));
  EXPECT(hm_bivector_parse(ctx, "2 1 = z1", 3, &bad) == HM_ERR_PARSE);
  hm_poly_free(f);
  hm_poly_free(g);
  hm_poly_free(br);
  hm_poly_free(cas);
  hm_field_free(curl);
  hm_field_free(mod);
  hm_field_free(res);
  hm_bivector_free(p);
}

static void test_manifest(hm_context* ctx) {
  hm_manifest* m = NULL;
  hm_report *r1 = NULL, *r2 = NULL;
  char *a = NULL, *b = NULL;
  EXPECT(hm_manifest_load_string(ctx, kManifest, &m) == HM_OK);
  EXPECT(hm_manifest_task_count(m) == 1);
  EXPECT(hm_run(ctx, m, 5, &r1) == HM_OK);
  EXPECT(hm_run(ctx, m, 5, &r2) == HM_OK);
  EXPECT(hm_report_exit_code(r1) == 0);
  EXPECT(hm_report_render(ctx, r1, HM_FORMAT_JSON, 0, &a) == HM_OK);
  EXPECT(hm_report_render(ctx, r2, HM_FORMAT_JSON, 0, &b) == HM_OK);
  EXPECT(a && b && strcmp(a, b) == 0);
  EXPECT(a && strstr(a, "\"verdict\": \"pass\"") != NULL);
  hm_string_free(a);
  hm_string_free(b);
  hm_report_free(r1);
  hm_report_free(r2);
  hm_manifest_free(m);

  m = NULL;
  EXPECT(hm_manifest_load_string(ctx, "[dim]\n2\n[task]\nt: first_integral field=Q f=z1\n", &m) == HM_ERR_PARSE);
  EXPECT(m == NULL);
  EXPECT(hm_last_error_line(ctx) == 4);
  EXPECT(hm_manifest_load_file(ctx, "/nonexistent/x.hlm", &m) == HM_ERR_IO);
}

static void test_integrate(hm_context* ctx) {
  hm_field* z = NULL;
  hm_trajectory* t = NULL;
  hm_poly* f = NULL;
  const double x0[2] = {1.0, 0.0};
  double state[2], re = -1, im = -1;
  size_t last;
  EXPECT(hm_field_parse(ctx, "i*z1", 1, &z) == HM_OK);
  EXPECT(hm_integrate(ctx, z, x0, 2, 3.141592653589793, 1e-3, &t) == HM_OK);
  EXPECT(hm_trajectory_dim(t) == 2);
  EXPECT(!hm_trajectory_truncated(t));
  last = hm_trajectory_size(t) - 1;
  EXPECT(fabs(hm_trajectory_time(t, last) - 3.141592653589793) < 1e-12);
  EXPECT(hm_trajectory_state(t, last, state) == HM_OK);
  EXPECT(fabs(state[0] + 1.0) < 1e-9);
  EXPECT(fabs(state[1]) < 1e-9);
  EXPECT(hm_trajectory_state(t, last + 1, state) == HM_ERR_ARGUMENT);
  EXPECT(hm_poly_parse(ctx, "z1^2", 1, &f) == HM_OK);
  EXPECT(hm_trajectory_drift(ctx, t, f, &re, &im) == HM_OK);
  EXPECT(re > 1.0);
  hm_trajectory_free(t);
  t = NULL;
  EXPECT(hm_integrate(ctx, z, x0, 1, 1.0, 0.1, &t) == HM_ERR_DIMENSION);
  EXPECT(hm_integrate(ctx, z, x0, 2, 1.0, -0.1, &t) == HM_ERR_DOMAIN);
  EXPECT(t == NULL);
  hm_poly_free(f);
  hm_field_free(z);
}

int main(void) {
  hm_context* ctx = hm_context_new();
  EXPECT(ctx != NULL);
  EXPECT(strlen(hm_version()) > 0);
  test_polys(ctx);
  test_fields(ctx);
  test_bivectors(ctx);
  test_manifest(ctx);
  test_integrate(ctx);
  hm_context_free(ctx);
  if (failures) {
    fprintf(stderr, "%d C API check(s) failed\n", failures);
    return 1;
  }
  printf("C API checks passed\n");
  return 0;
}

/* C interface to holomult. All objects are opaque handles owned by the
 * caller and released with the matching *_free function. Functions return an
 * hm_status; on failure the context holds a message and, for positioned
 * input errors, a 1-based line and column. */
#ifndef HOLOMULT_H
#define HOLOMULT_H

#include <stddef.h>
#include <stdint.h>

#if defined(HOLOMULT_BUILDING_LIBRARY)
#define HM_API __attribute__((visibility("default")))
#else
#define HM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hm_status {
  HM_OK = 0,
  HM_ERR_PARSE = 1,     /* positioned syntax or manifest error */
  HM_ERR_DIMENSION = 2, /* operand dimensions disagree */
  HM_ERR_DOMAIN = 3,    /* argument outside the operation's domain */
  HM_ERR_IO = 4,        /* file could not be read */
  HM_ERR_ARGUMENT = 5,  /* null handle or bad enum value */
  HM_ERR_INTERNAL = 6   /* internal identity check failed; a bug */
} hm_status;

typedef enum hm_format { HM_FORMAT_TEXT = 0, HM_FORMAT_JSON = 1 } hm_format;

typedef struct hm_context hm_context;
typedef struct hm_manifest hm_manifest;
typedef struct hm_report hm_report;
typedef struct hm_poly hm_poly;
typedef struct hm_field hm_field;
typedef struct hm_bivector hm_bivector;
typedef struct hm_trajectory hm_trajectory;

HM_API const char* hm_version(void);

HM_API hm_context* hm_context_new(void);
HM_API void hm_context_free(hm_context* ctx);
/* Message of the last failure on ctx, "" when none. */
HM_API const char* hm_last_error(const hm_context* ctx);
/* Position of the last HM_ERR_PARSE failure; 0 otherwise. */
HM_API size_t hm_last_error_line(const hm_context* ctx);
HM_API size_t hm_last_error_column(const hm_context* ctx);

/* Strings handed out by the library. */
HM_API void hm_string_free(char* s);

/* Manifests and reports. */
HM_API hm_status hm_manifest_load_file(hm_context* ctx, const char* path, hm_manifest** out);
HM_API hm_status hm_manifest_load_string(hm_context* ctx, const char* text, hm_manifest** out);
HM_API size_t hm_manifest_task_count(const hm_manifest* m);
HM_API void hm_manifest_free(hm_manifest* m);

HM_API hm_status hm_run(hm_context* ctx, const hm_manifest* m, uint64_t seed, hm_report** out);
/* 0 when every task passed, 1 otherwise. */
HM_API int hm_report_exit_code(const hm_report* r);
HM_API hm_status hm_report_render(hm_context* ctx, const hm_report* r, hm_format format, int timing, char** out);
HM_API void hm_report_free(hm_report* r);

/* Polynomials in z1..zn. */
HM_API hm_status hm_poly_parse(hm_context* ctx, const char* text, size_t n, hm_poly** out);
HM_API hm_status hm_poly_to_string(hm_context* ctx, const hm_poly* p, char** out);
HM_API int hm_poly_is_zero(const hm_poly* p);
HM_API void hm_poly_free(hm_poly* p);

/* Fields: n comma-separated component expressions. */
HM_API hm_status hm_field_parse(hm_context* ctx, const char* text, size_t n, hm_field** out);
HM_API hm_status hm_field_to_string(hm_context* ctx, const hm_field* f, char** out);
HM_API int hm_field_is_zero(const hm_field* f);
HM_API void hm_field_free(hm_field* f);

/* Bivectors: entries "i j = expr" with i < j, separated by ';'. */
HM_API hm_status hm_bivector_parse(hm_context* ctx, const char* text, size_t n, hm_bivector** out);
HM_API void hm_bivector_free(hm_bivector* b);

/* Operations. `volume_weight` is a constant expression, or NULL for 1. */
HM_API hm_status hm_divergence(hm_context* ctx, const hm_field* z, const char* volume_weight, hm_poly** out);
HM_API hm_status hm_lie_bracket(hm_context* ctx, const hm_field* z, const hm_field* w, hm_field** out);
HM_API hm_status hm_poisson_bracket(hm_context* ctx, const hm_poly* f, const hm_poly* g, const hm_bivector* p,
                                    hm_poly** out);
/* Curl of a bivector, returned as a vector field. */
HM_API hm_status hm_curl(hm_context* ctx, const hm_bivector* p, const char* volume_weight, hm_field** out);
HM_API hm_status hm_modular(hm_context* ctx, const hm_bivector* p, const char* volume_weight, hm_field** out);
HM_API hm_status hm_last_multiplier(hm_context* ctx, const hm_field* z, const hm_poly* alpha,
                                    const char* volume_weight, int* holds, hm_poly** residual);
HM_API hm_status hm_bivector_lm(hm_context* ctx, const hm_poly* alpha, const hm_bivector* p,
                                const char* volume_weight, int* holds, hm_field** residual);
/* Real and imaginary parts in x1..xn, y1..yn, as "re: ...\nim: ...\n". */
HM_API hm_status hm_realify_poly(hm_context* ctx, const hm_poly* p, char** out);
/* The real fields Z_R = (X, Y) and W_R = (Y, -X), one component per line. */
HM_API hm_status hm_realify_field(hm_context* ctx, const hm_field* z, char** out);

/* RK4 on the real flow of z; x0 holds 2n values (x1..xn, y1..yn). */
HM_API hm_status hm_integrate(hm_context* ctx, const hm_field* z, const double* x0, size_t len, double t_end,
                              double step, hm_trajectory** out);
HM_API size_t hm_trajectory_size(const hm_trajectory* t);
HM_API size_t hm_trajectory_dim(const hm_trajectory* t);
HM_API int hm_trajectory_truncated(const hm_trajectory* t);
HM_API double hm_trajectory_time(const hm_trajectory* t, size_t k);
/* Copies hm_trajectory_dim values of sample k into out. */
HM_API hm_status hm_trajectory_state(const hm_trajectory* t, size_t k, double* out);
/* Largest change of Re f and Im f along the trajectory. */
HM_API hm_status hm_trajectory_drift(hm_context* ctx, const hm_trajectory* t, const hm_poly* f, double* re_drift,
                                     double* im_drift);
HM_API void hm_trajectory_free(hm_trajectory* t);

#ifdef __cplusplus
}
#endif

#endif /* HOLOMULT_H */

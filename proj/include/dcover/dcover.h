/* dcover: exact correction terms of branched double covers and the
 * concordance splitting / metabolizer obstructions they support.
 *
 * C API over an opaque-handle core. Every function returns a status code;
 * results come back through out-parameters (listed first). On failure the
 * out-parameters are untouched and dcover_last_error() describes the
 * problem for the calling thread. Strings returned through char** are
 * heap-allocated; release them with dcover_string_free().
 */

#ifndef DCOVER_H
#define DCOVER_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* status codes */
#define DCOVER_OK 0
#define DCOVER_EINVAL 1    /* precondition violated / malformed input */
#define DCOVER_EINTERNAL 2 /* exactness assertion failed: inconsistent inputs */
#define DCOVER_EIO 3       /* unreadable or unparsable file */
#define DCOVER_ERANGE 4    /* value does not fit the requested C type */

/* output formats */
#define DCOVER_FORMAT_MD 0
#define DCOVER_FORMAT_CSV 1
#define DCOVER_FORMAT_JSON 2

/* sign conventions: d = 2*delta - lens (TABLE) or its global negation */
#define DCOVER_CONV_TABLE 0
#define DCOVER_CONV_APPENDIX 1

typedef struct dcover_poly dcover_poly;           /* integer Laurent polynomial */
typedef struct dcover_staircase dcover_staircase; /* validated staircase */
typedef struct dcover_points dcover_points;       /* set of bifiltration levels */
typedef struct dcover_dtable dcover_dtable;       /* d-invariants of every Spin^c label */
typedef struct dcover_splitgrid dcover_splitgrid; /* second-difference grid + verdict */
typedef struct dcover_metab dcover_metab;         /* metabolizer candidates + flags */

const char* dcover_last_error(void);
void dcover_string_free(char* s);

/* ---- polynomials ---- */
int dcover_poly_cyclotomic(dcover_poly** out, int64_t n);
int dcover_poly_torus2_alexander(dcover_poly** out, int64_t n); /* n odd */
int dcover_poly_pretzel_alexander(dcover_poly** out, int64_t n); /* n odd */
int dcover_poly_cyclotomic_split(dcover_poly** out_2p, dcover_poly** out_2q,
                                 dcover_poly** out_2pq, int64_t p, int64_t q);
int dcover_poly_mul(dcover_poly** out, const dcover_poly* a, const dcover_poly* b);
int dcover_poly_equal(int* out, const dcover_poly* a, const dcover_poly* b);
int dcover_poly_eval(int64_t* out, const dcover_poly* p, int64_t x);
int dcover_poly_homology_order(int64_t* out, const dcover_poly* p); /* |p(-1)| */
int dcover_poly_term_count(int64_t* out, const dcover_poly* p);
int dcover_poly_term(int64_t* exp, int64_t* coeff, const dcover_poly* p, int64_t idx);
int dcover_poly_to_string(char** out, const dcover_poly* p);
int dcover_poly_to_json(char** out, const dcover_poly* p);
/* polynomial plus its determinant |p(-1)| in the requested format */
int dcover_poly_render(char** out, const char* name, const dcover_poly* p, int format);
void dcover_poly_free(dcover_poly* p);

/* ---- staircases and generator sets ---- */
int dcover_staircase_torus_14_15(dcover_staircase** out);
int dcover_staircase_whitehead_sum_22(dcover_staircase** out);
int dcover_staircase_consecutive_torus(dcover_staircase** out, int64_t n); /* odd n >= 15 */
int dcover_staircase_unit(dcover_staircase** out, int64_t k);
int dcover_staircase_parse_json(dcover_staircase** out, const char* json_text);
int dcover_staircase_load(dcover_staircase** out, const char* path);
int dcover_staircase_points(dcover_points** out, const dcover_staircase* s);
void dcover_staircase_free(dcover_staircase* s);

int dcover_tensor(dcover_points** out, const dcover_staircase* s1, const dcover_staircase* s2);
int dcover_points_tensor(dcover_points** out, const dcover_points* a, const dcover_points* b);
int dcover_pareto_min(dcover_points** out, const dcover_points* s);
int dcover_points_count(int64_t* out, const dcover_points* s);
int dcover_points_get(int64_t* alpha, int64_t* beta, const dcover_points* s, int64_t idx);
int dcover_points_render(char** out, const dcover_points* s, int format);
void dcover_points_free(dcover_points* s);

/* K_n surgery complex: n = 1, or odd n >= 15 with n = 3 (mod 4).
 * out_source may be NULL. */
int dcover_branched_cover_complex(dcover_points** out, int64_t* out_N, char** out_source,
                                  int64_t n);

/* ---- correction terms ---- */
int dcover_psi(int64_t* out, int64_t alpha, int64_t beta, int64_t m);
int dcover_delta(int64_t* out, const dcover_points* s, int64_t m);
int dcover_lens_term(int64_t* num, int64_t* den, int64_t N, int64_t m);
int dcover_d_surgery(int64_t* num, int64_t* den, const dcover_points* s, int64_t N, int64_t m,
                     int convention);
int dcover_spinc_label(int64_t* m, int64_t g, int64_t N);

int dcover_dtable_compute(dcover_dtable** out, const dcover_points* s, int64_t N,
                          int convention, const char* source);
int dcover_dtable_N(int64_t* out, const dcover_dtable* t);
int dcover_dtable_get(int64_t* num, int64_t* den, const dcover_dtable* t, int64_t g);
int dcover_dtable_get_int(int64_t* out, const dcover_dtable* t, int64_t g);
int dcover_dtable_render(char** out, const dcover_dtable* t, int format);
void dcover_dtable_free(dcover_dtable* t);

/* ---- obstructions ---- */
int dcover_linking_form(int64_t* num, int64_t* den, int64_t x, int64_t y, int64_t N);

int dcover_split_obstruction(dcover_splitgrid** out, const dcover_dtable* t, int64_t p,
                             int64_t q);
int dcover_splitgrid_entry(int64_t* out, const dcover_splitgrid* g, int64_t i, int64_t j);
int dcover_splitgrid_verdict(int* out, const dcover_splitgrid* g);
int dcover_splitgrid_render(char** out, const dcover_splitgrid* g, int format);
void dcover_splitgrid_free(dcover_splitgrid* g);

int dcover_metabolizer_obstruction(dcover_metab** out, const dcover_dtable* t);
int dcover_metab_count(int64_t* out, const dcover_metab* m);
int dcover_metab_get(int64_t* generator, int64_t* order, int* linking_vanishes, int* d_vanishes,
                     const dcover_metab* m, int64_t idx);
int dcover_metab_verdict(int* out, const dcover_metab* m); /* 1 = obstructed */
int dcover_metab_render(char** out, const dcover_metab* m, int format);
void dcover_metab_free(dcover_metab* m);

/* full pipeline for n = pq: both value grids plus the verdict line */
int dcover_reproduce(char** out, int64_t p, int64_t q, int format, int convention);

#ifdef __cplusplus
}
#endif

#endif /* DCOVER_H */

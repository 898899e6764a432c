#ifndef CAUCHY_UMBRAL_H
#define CAUCHY_UMBRAL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CuFamily {
  CU_FAMILY_CAUCHY = 0,
  CU_FAMILY_HIGHER_CAUCHY = 1,
  CU_FAMILY_POLY_CAUCHY = 2,
  CU_FAMILY_MIXED = 3,
  CU_FAMILY_STIRLING1 = 4,
  CU_FAMILY_STIRLING2 = 5,
  CU_FAMILY_BERNOULLI = 6,
  CU_FAMILY_FROBENIUS_EULER = 7,
  CU_FAMILY_NARUMI = 8,
  CU_FAMILY_BERNOULLI2 = 9,
} CuFamily;

typedef enum CuStatus {
  CU_STATUS_OK = 0,
  CU_STATUS_NULL_POINTER = 1,
  CU_STATUS_INVALID_ARGUMENT = 2,
  CU_STATUS_DOMAIN = 3,
  CU_STATUS_TRUNCATION = 4,
  CU_STATUS_PARSE = 5,
  CU_STATUS_PANIC = 6,
} CuStatus;

/**
 * Opaque polynomial with exact rational coefficients.
 */
typedef struct CuPolynomial CuPolynomial;

/**
 * Parameters for `cu_family_poly`; fields a family does not use are ignored.
 */
typedef struct CuFamilyParams {
  int64_t r;
  int64_t k;
  int64_t s;
  int64_t alpha;
  int64_t lambda_num;
  int64_t lambda_den;
} CuFamilyParams;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string; do not free.
 */
const char *cu_version(void);

/**
 * Message for the last failed call on this thread, or NULL. Free with `cu_string_free`.
 */
char *cu_last_error(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library and not yet freed.
 */
void cu_string_free(char *s);

/**
 * `A_n^{(r,k)}(x)` into `*out`.
 *
 * # Safety
 * `out` must be valid for a pointer write.
 */
enum CuStatus cu_mixed_a(size_t n, int64_t r, int64_t k, struct CuPolynomial **out);

/**
 * Member `n` of `family` into `*out`. Number families yield constant polynomials;
 * Stirling families yield `sum_m S(n, m) x^m`.
 *
 * # Safety
 * `out` must be valid for a pointer write.
 */
enum CuStatus cu_family_poly(enum CuFamily family,
                             size_t n,
                             struct CuFamilyParams params,
                             struct CuPolynomial **out);

/**
 * # Safety
 * `p` must be NULL or a handle from this library that has not been freed.
 */
void cu_poly_free(struct CuPolynomial *p);

/**
 * Degree into `*out`; `-1` for the zero polynomial.
 *
 * # Safety
 * `p` must be a live handle and `out` valid for writes.
 */
enum CuStatus cu_poly_degree(const struct CuPolynomial *p, int64_t *out);

/**
 * Coefficient of `x^i` as `"num/den"` into `*out`; free with `cu_string_free`.
 *
 * # Safety
 * `p` must be a live handle and `out` valid for writes.
 */
enum CuStatus cu_poly_coeff(const struct CuPolynomial *p, size_t i, char **out);

/**
 * Text form, ascending powers (`"1/6 - 1x + 1x^2"`), into `*out`.
 *
 * # Safety
 * `p` must be a live handle and `out` valid for writes.
 */
enum CuStatus cu_poly_to_string(const struct CuPolynomial *p, char **out);

/**
 * `p(num/den)` as `"num/den"` into `*out`.
 *
 * # Safety
 * `p` must be a live handle and `out` valid for writes.
 */
enum CuStatus cu_poly_eval(const struct CuPolynomial *p, int64_t num, int64_t den, char **out);

/**
 * Verifies `identity` (a name such as `"thm8"`, or `"all"`) on its standard
 * grid up to `n_max` and writes the JSON suite report into `*out_json`.
 * `*out_passed` receives whether every identity (or one reading of each
 * theorem with a variant) passed.
 *
 * # Safety
 * `identity` must be a NUL-terminated string; `out_json` and `out_passed` valid for writes.
 */
enum CuStatus cu_verify_json(const char *identity,
                             size_t n_max,
                             size_t jobs,
                             char **out_json,
                             bool *out_passed);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* CAUCHY_UMBRAL_H */

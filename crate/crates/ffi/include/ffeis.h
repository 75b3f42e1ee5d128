#ifndef FFEIS_H
#define FFEIS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum FfeisRoute {
  FFEIS_ROUTE_ANALYTIC = 0,
  FFEIS_ROUTE_COMBINATORIAL = 1,
} FfeisRoute;

typedef enum FfeisStatus {
  FFEIS_STATUS_OK = 0,
  FFEIS_STATUS_NULL_POINTER = 1,
  FFEIS_STATUS_INVALID_INPUT = 2,
  FFEIS_STATUS_FUNCTIONAL_EQUATION = 3,
  FFEIS_STATUS_SINGULAR_AT_ONE = 4,
  FFEIS_STATUS_ENUMERATION_BUDGET = 5,
  FFEIS_STATUS_INVALID_MODEL = 6,
  FFEIS_STATUS_INCONSISTENT = 7,
  FFEIS_STATUS_IDENTITY_FAILED = 8,
  FFEIS_STATUS_PANIC = 9,
} FfeisStatus;

/**
 * Opaque handle to a validated `L(s, eta)`.
 */
typedef struct FfeisLFunction FfeisLFunction;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread, or null. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *ffeis_last_error_message(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void ffeis_string_free(char *s);

/**
 * Validates `L(T) = sum coeffs[k] T^k` over `F_q` and returns a handle.
 *
 * # Safety
 * `coeffs` must point to `len` readable values; `out` must be writable.
 */
enum FfeisStatus ffeis_lfunction_new(uint64_t q,
                                     const int64_t *coeffs,
                                     size_t len,
                                     struct FfeisLFunction **out);

/**
 * Recovers `L(s, eta)` of the cover `u^2 = f1, v^2 = f2` over `y^2 = f1 f2`
 * from point counts over `F_{p^1} .. F_{p^m}` (`m = 0` picks the minimum).
 *
 * # Safety
 * Coefficient pointers must cover their lengths; `out` must be writable.
 */
enum FfeisStatus ffeis_lfunction_from_curve(uint64_t p,
                                            const int64_t *f1,
                                            size_t len1,
                                            const int64_t *f2,
                                            size_t len2,
                                            uint32_t m,
                                            struct FfeisLFunction **out);

/**
 * # Safety
 * `h` must be null or a live handle from this library.
 */
void ffeis_lfunction_free(struct FfeisLFunction *h);

/**
 * Degree `w` of the polynomial, or 0 for a null handle.
 *
 * # Safety
 * `h` must be null or a live handle.
 */
size_t ffeis_lfunction_degree(const struct FfeisLFunction *h);

/**
 * Coefficient `c_k` as a decimal string.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum FfeisStatus ffeis_lfunction_coefficient(const struct FfeisLFunction *h, size_t k, char **out);

/**
 * `L(T = 1)` as a decimal string.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum FfeisStatus ffeis_lfunction_value_at_one(const struct FfeisLFunction *h, char **out);

/**
 * Degree of the constant-term cycle class along the chosen route, as an
 * exact `p/q` string.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum FfeisStatus ffeis_degree_constant(const struct FfeisLFunction *h,
                                       int64_t d,
                                       uint32_t r,
                                       enum FfeisRoute route,
                                       char **out);

/**
 * Whether the constant term is fixed by `s -> -s` up to `eta`.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum FfeisStatus ffeis_constant_term_symmetric(const struct FfeisLFunction *h,
                                               int64_t d,
                                               int64_t eta,
                                               bool *out);

/**
 * The cycle polynomial `f_n`, e.g. `"x + x^2"` for `n = 3`.
 *
 * # Safety
 * `out` must be writable.
 */
enum FfeisStatus ffeis_fpoly(uint32_t n, char **out);

/**
 * Point counts of the base and cover curves over `F_{p^i}`.
 *
 * # Safety
 * Coefficient pointers must cover their lengths; outputs must be writable.
 */
enum FfeisStatus ffeis_count_points(uint64_t p,
                                    const int64_t *f1,
                                    size_t len1,
                                    const int64_t *f2,
                                    size_t len2,
                                    uint32_t i,
                                    uint64_t budget,
                                    uint64_t *out_base,
                                    uint64_t *out_cover);

/**
 * Runs the identity suite on a JSON bundle (null for the built-in one) and
 * writes the text report. Returns `IDENTITY_FAILED` if any check fails; the
 * report is written in that case too.
 *
 * # Safety
 * `bundle_json` must be null or a nul-terminated string; `out_report` must be
 * writable.
 */
enum FfeisStatus ffeis_verify(const char *bundle_json, uint32_t r_max, char **out_report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FFEIS_H */

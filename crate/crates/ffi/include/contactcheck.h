#ifndef CONTACTCHECK_H
#define CONTACTCHECK_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum CcStatus {
  CC_STATUS_OK = 0,
  CC_STATUS_NULL_POINTER = 1,
  CC_STATUS_INVALID_UTF8 = 2,
  CC_STATUS_PARSE = 3,
  CC_STATUS_OUT_OF_RANGE = 4,
  CC_STATUS_UNKNOWN_SCENARIO = 5,
  CC_STATUS_SHAPE = 6,
  CC_STATUS_INTERNAL = 7,
} CcStatus;

/**
 * Chain complex of free abelian groups.
 */
typedef struct CcComplex CcComplex;

/**
 * Integer matrix.
 */
typedef struct CcMatrix CcMatrix;

/**
 * Group presentation with finitely many generators and relators.
 */
typedef struct CcPresentation CcPresentation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code. Never null; do not free.
 */
const char *cc_status_message(enum CcStatus status);

/**
 * Copy of the message of the last failed call on this thread, or null if
 * the last call succeeded. Free with [`cc_string_free`].
 */
char *cc_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void cc_string_free(char *s);

/**
 * Run a named scenario and return its result as JSON. `n < 0` selects the
 * scenario's default parameter. `*passed` receives 1 for a pass, 0 for a
 * failure; the JSON carries the witness.
 *
 * # Safety
 * `scenario` must be a valid nul-terminated string; `json_out` and
 * `passed` must be valid for writes.
 */
enum CcStatus cc_verify(const char *scenario,
                        int64_t n,
                        bool unsafe_n,
                        bool control,
                        char **json_out,
                        int32_t *passed);

/**
 * Matrix from `rows * cols` row-major entries.
 *
 * # Safety
 * `entries` must point to `rows * cols` readable values (it may be null
 * when that product is 0); `out` must be valid for writes.
 */
enum CcStatus cc_matrix_new(size_t rows,
                            size_t cols,
                            const int64_t *entries,
                            struct CcMatrix **out);

/**
 * Matrix from the text format `rows cols` followed by row-major entries.
 *
 * # Safety
 * `text_in` must be a valid nul-terminated string; `out` must be valid
 * for writes.
 */
enum CcStatus cc_matrix_parse(const char *text_in, struct CcMatrix **out);

/**
 * # Safety
 * `m` must be null or a live handle from this library.
 */
void cc_matrix_free(struct CcMatrix *m);

/**
 * Number of rows, or 0 for a null handle.
 *
 * # Safety
 * `m` must be null or a live handle.
 */
size_t cc_matrix_rows(const struct CcMatrix *m);

/**
 * Number of columns, or 0 for a null handle.
 *
 * # Safety
 * `m` must be null or a live handle.
 */
size_t cc_matrix_cols(const struct CcMatrix *m);

/**
 * Entry `(row, col)`; `CC_STATUS_OUT_OF_RANGE` if the index is outside the
 * matrix or the entry does not fit in 64 bits.
 *
 * # Safety
 * `m` must be a live handle; `out` must be valid for writes.
 */
enum CcStatus cc_matrix_get(const struct CcMatrix *m, size_t row, size_t col, int64_t *out);

/**
 * Smith normal form `U M V = S`. Any of the outputs may be null to skip it.
 *
 * # Safety
 * `m` must be a live handle; non-null outputs must be valid for writes.
 */
enum CcStatus cc_matrix_smith(const struct CcMatrix *m,
                              struct CcMatrix **s,
                              struct CcMatrix **u,
                              struct CcMatrix **v);

/**
 * Nonzero invariant factors, space separated.
 *
 * # Safety
 * `m` must be a live handle; `out` must be valid for writes.
 */
enum CcStatus cc_matrix_invariant_factors(const struct CcMatrix *m, char **out);

/**
 * Chain complex from JSON `{"dims": [...], "boundaries": [...]}`.
 *
 * # Safety
 * `json` must be a valid nul-terminated string; `out` must be valid for
 * writes.
 */
enum CcStatus cc_complex_parse(const char *json, struct CcComplex **out);

/**
 * # Safety
 * `c` must be null or a live handle from this library.
 */
void cc_complex_free(struct CcComplex *c);

/**
 * Homology groups as a JSON array of strings such as `["Z", "Z/2", "0"]`,
 * indexed by degree.
 *
 * # Safety
 * `c` must be a live handle; `out` must be valid for writes.
 */
enum CcStatus cc_complex_homology(const struct CcComplex *c, char **out);

/**
 * Presentation from the `gens:` / `rel:` text format.
 *
 * # Safety
 * `text_in` must be a valid nul-terminated string; `out` must be valid
 * for writes.
 */
enum CcStatus cc_presentation_parse(const char *text_in, struct CcPresentation **out);

/**
 * # Safety
 * `p` must be null or a live handle from this library.
 */
void cc_presentation_free(struct CcPresentation *p);

/**
 * Simplified copy of `p`; the input handle is unchanged.
 *
 * # Safety
 * `p` must be a live handle; `out` must be valid for writes.
 */
enum CcStatus cc_presentation_simplify(const struct CcPresentation *p, struct CcPresentation **out);

/**
 * Presentation in the `gens:` / `rel:` text format.
 *
 * # Safety
 * `p` must be a live handle; `out` must be valid for writes.
 */
enum CcStatus cc_presentation_to_text(const struct CcPresentation *p, char **out);

/**
 * Abelianization in invariant-factor form, e.g. `Z^2 + Z/3`.
 *
 * # Safety
 * `p` must be a live handle; `out` must be valid for writes.
 */
enum CcStatus cc_presentation_abelianize(const struct CcPresentation *p, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CONTACTCHECK_H */

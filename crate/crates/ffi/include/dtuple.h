#ifndef DTUPLE_H
#define DTUPLE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum DtStatus {
  DT_STATUS_OK = 0,
  /**
   * The call succeeded and the answer is negative (not a map of tuples,
   * not rank 2, oracle check failed).
   */
  DT_STATUS_NEGATIVE = 1,
  DT_STATUS_NULL_POINTER = 2,
  DT_STATUS_INVALID_UTF8 = 3,
  DT_STATUS_PARSE_ERROR = 4,
  DT_STATUS_INVALID_CORRESPONDENCE = 5,
  DT_STATUS_ORACLE_ERROR = 6,
  DT_STATUS_PANIC = 7,
} DtStatus;

/**
 * Opaque validated correspondence.
 */
typedef struct DtCorrespondence DtCorrespondence;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a polynomial such as `"(x*y+x+y+2)^3"` into a new handle.
 *
 * # Safety
 * `expr` must be a nul-terminated string and `out` a valid pointer.
 */
enum DtStatus dt_correspondence_parse(const char *expr, struct DtCorrespondence **out);

/**
 * Loads a matrix document (JSON) into a new handle.
 *
 * # Safety
 * `json` must be a nul-terminated string and `out` a valid pointer.
 */
enum DtStatus dt_correspondence_from_json(const char *json, struct DtCorrespondence **out);

/**
 * Builds the correspondence `phi(x) = psi(y)` from two `"num / den"` maps.
 *
 * # Safety
 * `phi` and `psi` must be nul-terminated strings and `out` a valid pointer.
 */
enum DtStatus dt_compose(const char *phi, const char *psi, struct DtCorrespondence **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `h` must be null or a handle from this library not yet freed.
 */
void dt_correspondence_free(struct DtCorrespondence *h);

/**
 * Degree `d` of the correspondence; 0 for a null handle.
 *
 * # Safety
 * `h` must be null or a live handle.
 */
size_t dt_correspondence_degree(const struct DtCorrespondence *h);

/**
 * Exact rank of the coefficient matrix; 0 for a null handle.
 *
 * # Safety
 * `h` must be null or a live handle.
 */
size_t dt_correspondence_rank(const struct DtCorrespondence *h);

/**
 * Writes the matrix document of `h` to `*out`.
 *
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
enum DtStatus dt_correspondence_to_json(const struct DtCorrespondence *h, char **out);

/**
 * Classification report as JSON. Returns `Negative` when `h` is not a map
 * of tuples; the report is written either way.
 *
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
enum DtStatus dt_classify_json(const struct DtCorrespondence *h, char **out);

/**
 * Separated form as JSON. Returns `Negative` (and leaves `*out` untouched)
 * when the matrix does not have rank 2.
 *
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
enum DtStatus dt_factorize_json(const struct DtCorrespondence *h, char **out);

/**
 * Symmetry report as JSON.
 *
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
enum DtStatus dt_symmetry_json(const struct DtCorrespondence *h, char **out);

/**
 * Numeric check of the tuple property. `Ok` means every sampled witness
 * passed, `Negative` that one failed; both fill the out-parameters.
 *
 * # Safety
 * `h` must be a live handle; `out_passed` and `out_mismatch` valid pointers.
 */
enum DtStatus dt_verify(const struct DtCorrespondence *h,
                        size_t samples,
                        double tol,
                        uint64_t seed,
                        bool *out_passed,
                        double *out_mismatch);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library not yet freed.
 */
void dt_string_free(char *s);

/**
 * Message for the last failed call on this thread, or null. The pointer is
 * valid until the next library call on the same thread.
 */
const char *dt_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DTUPLE_H */

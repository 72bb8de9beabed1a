/* C interface of the ghzbell library. Generated by cbindgen; do not edit. */

#ifndef GHZBELL_H
#define GHZBELL_H



#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible entry point.
typedef enum ghzbell_status {
  GHZBELL_OK = 0,
  // A pointer argument was null.
  GHZBELL_NULL_POINTER = 1,
  // Scenario, length or parameter out of range.
  GHZBELL_INVALID_ARGUMENT = 2,
  // The computation reported an error (see `ghzbell` library docs).
  GHZBELL_COMPUTE_FAILED = 3,
  // A caller-provided buffer is too small.
  GHZBELL_BUFFER_TOO_SMALL = 4,
  // An internal invariant failed.
  GHZBELL_INTERNAL = 5,
} ghzbell_status;

// Opaque integer Bell expression handle.
typedef struct ghzbell_tensor ghzbell_tensor;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Creates a tensor from `len = ma*mb*mc` coefficients (first party
// slowest). On success writes a new handle to `out`.
//
// # Safety
// `coeffs` must point to `len` readable values; `out` must be writable.
enum ghzbell_status ghzbell_tensor_new(uint32_t ma,
                                       uint32_t mb,
                                       uint32_t mc,
                                       const int64_t *coeffs,
                                       size_t len,
                                       struct ghzbell_tensor **out);

// Releases a tensor handle; null is a no-op.
//
// # Safety
// `t` must be a handle from this library, not yet freed.
void ghzbell_tensor_free(struct ghzbell_tensor *t);

// Writes the setting counts of a tensor.
//
// # Safety
// All pointers must be valid.
enum ghzbell_status ghzbell_tensor_scenario(const struct ghzbell_tensor *t,
                                            uint32_t *ma,
                                            uint32_t *mb,
                                            uint32_t *mc);

// Copies the flat coefficients into `buf` (`len` must be at least the
// tensor dimension).
//
// # Safety
// `buf` must point to `len` writable values.
enum ghzbell_status ghzbell_tensor_coeffs(const struct ghzbell_tensor *t, int64_t *buf, size_t len);

// Exact local bound over deterministic strategies.
//
// # Safety
// All pointers must be valid.
enum ghzbell_status ghzbell_local_bound(const struct ghzbell_tensor *t, int64_t *out_bound);

// Facet certification at a claimed bound: writes whether the inequality is
// tight and the affine rank of its saturating set.
//
// # Safety
// All pointers must be valid.
enum ghzbell_status ghzbell_check_tightness(const struct ghzbell_tensor *t,
                                            int64_t claimed_bound,
                                            bool *out_tight,
                                            uint32_t *out_rank);

// Value of the expression against `len = dim` correlators in `[-1, 1]`.
//
// # Safety
// `correlators` must point to `len` readable values.
enum ghzbell_status ghzbell_evaluate(const struct ghzbell_tensor *t,
                                     const double *correlators,
                                     size_t len,
                                     double *out_value);

// GHZ correlators for equatorial angles: `angles` holds `ma+mb+mc` values
// (first party first), `buf` receives `ma*mb*mc` correlators.
//
// # Safety
// `angles` and `buf` must point to arrays of the stated lengths.
enum ghzbell_status ghzbell_ghz_point(uint32_t ma,
                                      uint32_t mb,
                                      uint32_t mc,
                                      const double *angles,
                                      size_t angles_len,
                                      double *buf,
                                      size_t buf_len);

// Best GHZ-equatorial see-saw value from `restarts` random starts.
//
// # Safety
// All pointers must be valid.
enum ghzbell_status ghzbell_seesaw_equatorial(const struct ghzbell_tensor *t,
                                              uint32_t restarts,
                                              uint64_t seed,
                                              double *out_value);

// General see-saw over arbitrary pure three-qubit states and traceless
// observables; cross-checks the equatorial value.
//
// # Safety
// All pointers must be valid.
enum ghzbell_status ghzbell_seesaw_general(const struct ghzbell_tensor *t,
                                           uint32_t restarts,
                                           uint64_t seed,
                                           double *out_value);

// Critical visibility `L / Q`.
//
// # Safety
// `out` must be writable.
enum ghzbell_status ghzbell_visibility(double local_bound, double quantum, double *out);

// Snaps a real direction (`len = ma*mb*mc`) to a facet of the local
// polytope and re-certifies it exactly. On success writes a new tensor
// handle and its exact local bound.
//
// # Safety
// `direction` must point to `len` readable values; out-pointers writable.
enum ghzbell_status ghzbell_find_facet(uint32_t ma,
                                       uint32_t mb,
                                       uint32_t mc,
                                       const double *direction,
                                       size_t len,
                                       int64_t max_denominator,
                                       struct ghzbell_tensor **out_tensor,
                                       int64_t *out_bound);

// Hex canonical digest under relabeling equivalence, NUL-terminated.
// `buf_len` must be at least 65.
//
// # Safety
// `buf` must point to `buf_len` writable bytes.
enum ghzbell_status ghzbell_canonical_digest(const struct ghzbell_tensor *t,
                                             char *buf,
                                             size_t buf_len);

// Number of bundled catalog entries.
//
// # Safety
// `out` must be writable.
enum ghzbell_status ghzbell_catalog_len(size_t *out);

// Fetches catalog entry `index`: a new tensor handle, the published local
// bound and visibility, and the NUL-terminated label (buffer of at least 16
// bytes recommended).
//
// # Safety
// All pointers must be valid; `label_buf` must hold `label_len` bytes.
enum ghzbell_status ghzbell_catalog_entry(size_t index,
                                          struct ghzbell_tensor **out_tensor,
                                          int64_t *out_bound,
                                          double *out_visibility,
                                          char *label_buf,
                                          size_t label_len);

// Library version as a static NUL-terminated string.
const char *ghzbell_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GHZBELL_H */

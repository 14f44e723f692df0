#ifndef HYPERBRIDGE_H
#define HYPERBRIDGE_H

/* This header is generated by cbindgen from crates/ffi; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every fallible call.
typedef enum HbStatus {
  // Success; output pointers are populated.
  HB_STATUS_OK = 0,
  // Mathematically well-formed input outside the operation's domain
  // (singular curve, non-square value, degenerate parameters, ...).
  HB_STATUS_DOMAIN_ERROR = 1,
  // Malformed input: bad JSON, wrong shape, unparsable rational.
  HB_STATUS_USAGE_ERROR = 2,
  // A required pointer argument was NULL.
  HB_STATUS_NULL_POINTER = 3,
  // A string argument was not valid UTF-8.
  HB_STATUS_INVALID_UTF8 = 4,
  // Internal panic; a bug, not a caller error.
  HB_STATUS_INTERNAL_PANIC = 5,
} HbStatus;

// Opaque parsed hypermatrix (either shape). Create with
// [`hb_hypermatrix_parse`], destroy with [`hb_hypermatrix_free`].
typedef struct HbHypermatrix HbHypermatrix;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// ABI version of this header/library pair.
uint32_t hb_abi_version(void);

// Message describing the most recent failure on this thread. The pointer is
// valid until the next failing call on the same thread; do not free it.
const char *hb_last_error_message(void);

// Free a string returned by this library. NULL is ignored.
//
// # Safety
// `s` must be a pointer previously returned through an output parameter of
// this library and not yet freed.
void hb_string_free(char *s);

// Parse hypermatrix JSON (`{"shape":[2,2,2]|[2,2,2,2],"entries":[...]}`,
// entries as integers or `"p/q"` strings) into an opaque handle.
//
// # Safety
// `json` must be a valid NUL-terminated string; `out` must be a valid
// pointer to receive the handle.
enum HbStatus hb_hypermatrix_parse(const char *json, struct HbHypermatrix **out);

// Release a handle from [`hb_hypermatrix_parse`]. NULL is ignored.
//
// # Safety
// `h` must come from `hb_hypermatrix_parse` and not be freed twice.
void hb_hypermatrix_free(struct HbHypermatrix *h);

// Cayley's hyperdeterminant of a shape-[2,2,2] handle, as a rational string.
//
// # Safety
// `h` must be a live handle; `out` must be valid to receive a string.
enum HbStatus hb_cayley_det(const struct HbHypermatrix *h, char **out);

// Invariant report (quartic, S, T, delta, J-or-null) of a shape-[2,2,2,2]
// handle, as a JSON string.
//
// # Safety
// `h` must be a live handle; `out` must be valid to receive a string.
enum HbStatus hb_invariants(const struct HbHypermatrix *h, char **out);

// Bounded trilinear solution search on a shape-[2,2,2,2] handle with integer
// entries; the search report JSON matches the CLI output.
//
// # Safety
// `h` must be a live handle; `out` must be valid to receive a string.
enum HbStatus hb_trilinear_search(const struct HbHypermatrix *h, uint32_t bound, char **out);

// Bridge of the (k,m,p,r,s,t) family: uv-form, cubic, and the cube-corner
// verification flag, as JSON. Arguments are rational strings.
//
// # Safety
// All six parameter strings must be valid NUL-terminated strings; `out`
// must be valid to receive a string.
enum HbStatus hb_bridge(const char *k,
                        const char *m,
                        const char *p,
                        const char *r,
                        const char *s,
                        const char *t,
                        char **out);

// Add two points on y² = x³ + αx + β. `alpha` and `beta` are rational
// strings; points are `"O"` or `{"x":"..","y":".."}` JSON; the sum is
// written in the same point format.
//
// # Safety
// All strings must be valid NUL-terminated strings; `out` must be valid to
// receive a string.
enum HbStatus hb_curve_add(const char *alpha,
                           const char *beta,
                           const char *p_json,
                           const char *q_json,
                           char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HYPERBRIDGE_H */

#ifndef BINPADE_H
#define BINPADE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every call. Zero is success.
 */
typedef enum BinpadeStatus {
  BINPADE_STATUS_OK = 0,
  BINPADE_STATUS_INVALID_SYSTEM = 1,
  BINPADE_STATUS_SINGULAR_SYSTEM = 2,
  BINPADE_STATUS_NON_DIVISIBLE = 3,
  BINPADE_STATUS_NOT_APPLICABLE = 4,
  BINPADE_STATUS_IDENTITY_VIOLATION = 5,
  BINPADE_STATUS_BAD_PARAMS = 6,
  BINPADE_STATUS_ROOT_OF_UNITY = 7,
  BINPADE_STATUS_ALL_ZERO = 8,
  BINPADE_STATUS_DIVISION_BY_ZERO = 9,
  BINPADE_STATUS_NOT_DEGREE_N = 10,
  BINPADE_STATUS_Q1_IS_ONE = 11,
  BINPADE_STATUS_INVARIANT_VIOLATION = 12,
  BINPADE_STATUS_INDETERMINATE = 13,
  BINPADE_STATUS_INDETERMINATE_PARTIAL_QUOTIENT = 14,
  BINPADE_STATUS_PRECONDITION = 15,
  BINPADE_STATUS_PARSE = 16,
  BINPADE_STATUS_NULL_POINTER = 17,
  BINPADE_STATUS_PANIC = 18,
} BinpadeStatus;

/**
 * An `m × m` system `A_hk(w)` for `ω_k = (k-1)/n`, `ϱ_k = ϱ`.
 */
typedef struct BinpadeNthRootSystem BinpadeNthRootSystem;

/**
 * `ξ = (a/b)^{1/n}` with `m` and `ε`.
 */
typedef struct BinpadeTarget BinpadeTarget;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after success.
 * The pointer is valid until the next call into this library.
 */
const char *binpade_last_error(void);

/**
 * Library version, statically allocated.
 */
const char *binpade_version(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void binpade_string_free(char *s);

/**
 * Builds the system for comma-separated `omega` and `rho` and writes its
 * JSON to `out_json`.
 *
 * # Safety
 * String arguments must be NUL-terminated; `out_json` must be writable.
 */
enum BinpadeStatus binpade_pade_construct_json(const char *omega, const char *rho, char **out_json);

/**
 * # Safety
 * `out` must be writable.
 */
enum BinpadeStatus binpade_nth_root_system_new(uint32_t n,
                                               uint32_t m,
                                               uint64_t rho,
                                               struct BinpadeNthRootSystem **out);

/**
 * # Safety
 * `sys` must come from `binpade_nth_root_system_new` or be null.
 */
void binpade_nth_root_system_free(struct BinpadeNthRootSystem *sys);

/**
 * # Safety
 * `sys` must be a live handle; `out_json` must be writable.
 */
enum BinpadeStatus binpade_nth_root_system_to_json(const struct BinpadeNthRootSystem *sys,
                                                   char **out_json);

/**
 * Exact `U_h(w, y)` for the 0-based row `h`, written as `"p/q"`.
 *
 * # Safety
 * `sys` must be a live handle; strings NUL-terminated; `out_value` writable.
 */
enum BinpadeStatus binpade_nth_root_system_eval_u(const struct BinpadeNthRootSystem *sys,
                                                  size_t h,
                                                  const char *w,
                                                  const char *y,
                                                  char **out_value);

/**
 * Smallest 0-based row with `U_h(w, y) != 0` and that value.
 *
 * # Safety
 * As for `binpade_nth_root_system_eval_u`; `out_h` must be writable.
 */
enum BinpadeStatus binpade_nth_root_system_select_h(const struct BinpadeNthRootSystem *sys,
                                                    const char *w,
                                                    const char *y,
                                                    size_t *out_h,
                                                    char **out_value);

/**
 * # Safety
 * `eps` must be NUL-terminated; `out` writable.
 */
enum BinpadeStatus binpade_target_new(uint64_t a,
                                      uint64_t b,
                                      uint32_t n,
                                      uint32_t m,
                                      const char *eps,
                                      struct BinpadeTarget **out);

/**
 * # Safety
 * `t` must come from `binpade_target_new` or be null.
 */
void binpade_target_free(struct BinpadeTarget *t);

/**
 * Gap certificate as JSON.
 *
 * # Safety
 * `t` must be a live handle; `out_json` writable.
 */
enum BinpadeStatus binpade_certify_json(const struct BinpadeTarget *t, char **out_json);

/**
 * `ϑ₁, ϑ₂` for `p1/q1, p2/q2` as JSON. `rho = 0` selects `ϱ` from the
 * denominators; any other value fixes it.
 *
 * # Safety
 * `t` must be a live handle; strings NUL-terminated; `out_json` writable.
 */
enum BinpadeStatus binpade_theta_json(const struct BinpadeTarget *t,
                                      const char *p1,
                                      const char *q1,
                                      const char *p2,
                                      const char *q2,
                                      uint64_t rho,
                                      uint32_t prec,
                                      char **out_json);

/**
 * Continued-fraction report as JSON.
 *
 * # Safety
 * `t` must be a live handle; `out_json` writable.
 */
enum BinpadeStatus binpade_hunt_json(const struct BinpadeTarget *t,
                                     size_t depth,
                                     uint32_t prec,
                                     char **out_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BINPADE_H */

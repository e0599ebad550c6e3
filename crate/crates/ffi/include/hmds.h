#ifndef HMDS_H
#define HMDS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Method for `hmds_is_2mds`.
 */
typedef enum HmdsMethod {
  /**
   * Determinant test on the code itself; decides lightly-2-MDS.
   */
  HMDS_METHOD_DET = 0,
  /**
   * Determinant test on every relevant puncturing.
   */
  HMDS_METHOD_PUNCTURE = 1,
  /**
   * Exhaustive coset enumeration.
   */
  HMDS_METHOD_BRUTE = 2,
} HmdsMethod;

typedef enum HmdsStatus {
  HMDS_STATUS_OK = 0,
  HMDS_STATUS_NULL_POINTER = 1,
  HMDS_STATUS_INVALID_ARGUMENT = 2,
  HMDS_STATUS_PARSE = 3,
  HMDS_STATUS_BUDGET_EXCEEDED = 4,
  HMDS_STATUS_NOT_MDS = 5,
  HMDS_STATUS_PRECONDITION = 6,
  HMDS_STATUS_UNKNOWN_CASE = 7,
  HMDS_STATUS_INTERNAL = 8,
} HmdsStatus;

/**
 * Opaque handle to a linear code.
 */
typedef struct HmdsCode HmdsCode;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty if none. The
 * pointer stays valid until the next failing call on the same thread.
 */
const char *hmds_last_error(void);

/**
 * Library version as a static string.
 */
const char *hmds_version(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library and not yet freed.
 */
void hmds_string_free(char *s);

/**
 * Sets the enumeration budget for all threads; 0 restores the default.
 */
void hmds_set_budget(uint64_t budget);

/**
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum HmdsStatus hmds_code_from_json(const char *json, struct HmdsCode **out);

/**
 * Loads an embedded example code by name (see `hmds repro --dump`).
 *
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be writable.
 */
enum HmdsStatus hmds_code_fixture(const char *name, struct HmdsCode **out);

/**
 * Code with parity-check rows (v_j a_j^i), i < n - k, over GF(p).
 *
 * # Safety
 * `locators` must point to `n` readable values; `multipliers` is null or
 * points to `n` readable values; `out` must be writable.
 */
enum HmdsStatus hmds_code_grs_prime(uint64_t p,
                                    const uint64_t *locators,
                                    const uint64_t *multipliers,
                                    size_t n,
                                    size_t k,
                                    struct HmdsCode **out);

/**
 * # Safety
 * `code` must be null or a handle from this library not yet freed.
 */
void hmds_code_free(struct HmdsCode *code);

/**
 * # Safety
 * `code` must be a live handle; `n` and `k` must be writable.
 */
enum HmdsStatus hmds_code_dimensions(const struct HmdsCode *code, size_t *n, size_t *k);

/**
 * # Safety
 * `code` must be a live handle; `out` must be writable.
 */
enum HmdsStatus hmds_code_to_json(const struct HmdsCode *code, char **out);

/**
 * # Safety
 * `code` must be a live handle; `out` must be writable.
 */
enum HmdsStatus hmds_code_dual(const struct HmdsCode *code, struct HmdsCode **out);

/**
 * # Safety
 * `code` must be a live handle; `out` must be writable.
 */
enum HmdsStatus hmds_is_mds(const struct HmdsCode *code, bool *out);

/**
 * # Safety
 * `code` must be a live handle; `out` must be writable.
 */
enum HmdsStatus hmds_min_distance(const struct HmdsCode *code, size_t *out);

/**
 * # Safety
 * `code` must be a live handle; `out` writable; `witness` null or writable.
 */
enum HmdsStatus hmds_is_list_decodable(const struct HmdsCode *code,
                                       size_t tau,
                                       uint64_t list,
                                       bool *out,
                                       char **witness);

/**
 * Strong list decodability with weight-sum bound `total` = (L+1) tau.
 *
 * # Safety
 * `code` must be a live handle; `out` writable; `witness` null or writable.
 */
enum HmdsStatus hmds_is_strongly_list_decodable(const struct HmdsCode *code,
                                                uint64_t total,
                                                uint64_t list,
                                                bool *out,
                                                char **witness);

/**
 * # Safety
 * `code` must be a live handle; `out` writable; `witness` null or writable.
 */
enum HmdsStatus hmds_is_2mds(const struct HmdsCode *code,
                             enum HmdsMethod method,
                             bool *out,
                             char **witness);

/**
 * L-MDS sweep for L in [1, l_max], as JSON.
 *
 * # Safety
 * `code` must be a live handle; `out` must be writable.
 */
enum HmdsStatus hmds_l_mds_profile(const struct HmdsCode *code, uint64_t l_max, char **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum HmdsStatus hmds_construct_rho3(size_t h, struct HmdsCode **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum HmdsStatus hmds_construct_general(size_t rho, size_t h, struct HmdsCode **out);

/**
 * Greedy redundancy-3 code of length `n` over GF(2^m).
 *
 * # Safety
 * `out` must be writable.
 */
enum HmdsStatus hmds_construct_greedy(size_t m, size_t n, struct HmdsCode **out);

/**
 * Bound report for (n, k, q, L) at the improved Singleton radius, as JSON.
 *
 * # Safety
 * `out` must be writable.
 */
enum HmdsStatus hmds_bounds_report(uint64_t n, uint64_t k, uint64_t q, uint64_t list, char **out);

/**
 * Runs one reproduction case; `pass` gets the verdict and `out` the JSON record.
 *
 * # Safety
 * `id` must be a NUL-terminated string; `pass` and `out` must be writable.
 */
enum HmdsStatus hmds_repro_case(const char *id, bool *pass, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HMDS_H */

#ifndef BATTERY_SYT_H
#define BATTERY_SYT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum BsytStatus {
  BSYT_STATUS_OK = 0,
  BSYT_STATUS_NULL_ARGUMENT = 1,
  BSYT_STATUS_INVALID_UTF8 = 2,
  BSYT_STATUS_PARSE_ERROR = 3,
  BSYT_STATUS_INAPPLICABLE = 4,
  BSYT_STATUS_INTERNAL = 5,
} BsytStatus;

typedef enum BsytMethod {
  BSYT_METHOD_AUTO = 0,
  BSYT_METHOD_HYPER = 1,
  BSYT_METHOD_GENERAL = 2,
  BSYT_METHOD_CLOSED = 3,
  BSYT_METHOD_DP = 4,
} BsytMethod;

/**
 * An exact count together with the method that produced it.
 */
typedef struct BsytCount BsytCount;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Counts the tableaux of a shape given in the command-line shape syntax,
 * e.g. `"battery:rect:11x7,a=1,k=6"`. On success `*out` receives a handle
 * to release with `bsyt_count_free`.
 *
 * # Safety
 * `expr` must be a nul-terminated string and `out` a writable pointer.
 */
enum BsytStatus bsyt_count_shape(const char *expr,
                                 enum BsytMethod method,
                                 size_t size_cap,
                                 struct BsytCount **out);

/**
 * Counts `[(m^n), a, k]`: a rectangle of width `m` and `n` rows with `a`
 * cells stacked above column `k`.
 *
 * # Safety
 * `out` must be a writable pointer.
 */
enum BsytStatus bsyt_count_battery_rect(size_t m,
                                        size_t n,
                                        size_t a,
                                        size_t k,
                                        enum BsytMethod method,
                                        size_t size_cap,
                                        struct BsytCount **out);

/**
 * Decimal digits of the count, or null if `count` is null.
 *
 * # Safety
 * `count` must be null or a live handle.
 */
char *bsyt_count_decimal(const struct BsytCount *count);

/**
 * Prime factorization rendered as `2^5*3^2*11`, or null on failure.
 *
 * # Safety
 * `count` must be null or a live handle.
 */
char *bsyt_count_factored(const struct BsytCount *count);

/**
 * Method that produced the count; `Auto` only for a null handle.
 *
 * # Safety
 * `count` must be null or a live handle.
 */
enum BsytMethod bsyt_count_method(const struct BsytCount *count);

/**
 * # Safety
 * `count` must be null or a handle not yet freed.
 */
void bsyt_count_free(struct BsytCount *count);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void bsyt_string_free(char *s);

/**
 * Message from the last failed call on this thread, or null. Valid until
 * the next call into the library from the same thread.
 */
const char *bsyt_last_error(void);

/**
 * Library version, static storage.
 */
const char *bsyt_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BATTERY_SYT_H */

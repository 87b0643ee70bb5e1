#ifndef UCYCLE_H
#define UCYCLE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Result of a fallible call.
 */
typedef enum UcStatus {
  UC_STATUS_OK = 0,
  /*
   Unknown class name or inconsistent parameters.
   */
  UC_STATUS_INVALID_ARGUMENT = 1,
  /*
   `k^n` exceeds the enumeration cap.
   */
  UC_STATUS_CAP_EXCEEDED = 2,
  /*
   The class has no U-cycle; not an error in the usual sense.
   */
  UC_STATUS_NO_CYCLE = 3,
  /*
   A required pointer argument was null.
   */
  UC_STATUS_NULL_POINTER = 4,
  /*
   A result does not fit the output type.
   */
  UC_STATUS_OVERFLOW = 5,
  /*
   Internal inconsistency or a caught panic.
   */
  UC_STATUS_INTERNAL = 6,
} UcStatus;

/*
 Known existence result for a class.
 */
typedef enum UcVerdict {
  UC_VERDICT_EXISTS = 0,
  UC_VERDICT_NOT_EXISTS = 1,
  UC_VERDICT_UNSETTLED = 2,
} UcVerdict;

/*
 Opaque bound word class.
 */
typedef struct UcClass UcClass;

/*
 Opaque generated U-cycle; letters are 0-based indices.
 */
typedef struct UcCycle UcCycle;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the most recent failure on this thread. The pointer stays
 valid until the next failing call on the same thread.
 */
const char *uc_last_error_message(void);

/*
 Library version as a static NUL-terminated string.
 */
const char *uc_version(void);

/*
 Binds a class.

 `k`, `kv`, `kc` and `cap` use 0 for "not given" (cap 0 means the default
 of 10^7 words). `categories` may be null when `category_count` is 0.

 # Safety
 `name` must be a NUL-terminated string, `categories` must point to
 `category_count` readable values, and `out` must be writable.
 */
enum UcStatus uc_class_new(const char *name,
                           size_t n,
                           size_t k,
                           size_t kv,
                           size_t kc,
                           const size_t *categories,
                           size_t category_count,
                           uint64_t cap,
                           struct UcClass **out);

/*
 # Safety
 `class` must be null or a handle from [`uc_class_new`] not yet freed.
 */
void uc_class_free(struct UcClass *class_);

/*
 Alphabet size `k`, or 0 for a null handle.

 # Safety
 `class` must be null or a live handle.
 */
size_t uc_class_alphabet_size(const struct UcClass *class_);

/*
 Known existence verdict; a null handle reports `Unsettled`.

 # Safety
 `class` must be null or a live handle.
 */
enum UcVerdict uc_class_theorem_verdict(const struct UcClass *class_);

/*
 Writes `|class|` to `out`.

 # Safety
 `class` must be a live handle and `out` writable.
 */
enum UcStatus uc_class_count(const struct UcClass *class_, uint64_t *out);

/*
 Membership test for one word of `len` letter indices.

 # Safety
 `letters` must point to `len` readable bytes; `class` live; `out` writable.
 */
enum UcStatus uc_class_contains(const struct UcClass *class_,
                                const uint8_t *letters,
                                size_t len,
                                bool *out);

/*
 Engine verdict: whether the transition digraph has an Euler circuit.

 # Safety
 `class` must be a live handle and `out` writable.
 */
enum UcStatus uc_class_eulerian(const struct UcClass *class_, bool *out);

/*
 Generates a U-cycle. Returns `UC_STATUS_NO_CYCLE` (with `*out` null)
 when the digraph is not Eulerian.

 # Safety
 `class` must be a live handle and `out` writable.
 */
enum UcStatus uc_generate(const struct UcClass *class_, struct UcCycle **out);

/*
 # Safety
 `cycle` must be null or a live handle.
 */
size_t uc_cycle_len(const struct UcCycle *cycle);

/*
 Borrowed pointer to the cycle's letter indices; valid while the handle lives.

 # Safety
 `cycle` must be null or a live handle.
 */
const uint8_t *uc_cycle_letters(const struct UcCycle *cycle);

/*
 Renders the cycle with the class's display symbols. Free the result
 with [`uc_string_free`]. Returns null on failure.

 # Safety
 Both handles must be live.
 */
char *uc_cycle_render(const struct UcClass *class_, const struct UcCycle *cycle);

/*
 # Safety
 `s` must be null or a string returned by [`uc_cycle_render`].
 */
void uc_string_free(char *s);

/*
 # Safety
 `cycle` must be null or a handle from [`uc_generate`] not yet freed.
 */
void uc_cycle_free(struct UcCycle *cycle);

/*
 Brute-force check that `letters` is a U-cycle of the class. An invalid
 candidate is `UC_STATUS_OK` with `*valid == false`; the defect is then
 available from [`uc_last_error_message`].

 # Safety
 `letters` must point to `len` readable bytes; `class` live; `valid` writable.
 */
enum UcStatus uc_verify(const struct UcClass *class_,
                        const uint8_t *letters,
                        size_t len,
                        bool *valid);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* UCYCLE_H */

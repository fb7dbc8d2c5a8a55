#ifndef BRUHAT_H
#define BRUHAT_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Outcome of a call. The first four values match the exit codes of the
 * `bruhat` command.
 */
typedef enum BruhatStatus {
  BRUHAT_STATUS_OK = 0,
  /**
   * A well-formed request with no answer, such as a zero word.
   */
  BRUHAT_STATUS_DOMAIN = 1,
  /**
   * Malformed input text.
   */
  BRUHAT_STATUS_USAGE = 2,
  /**
   * An internal invariant failed or the engine panicked.
   */
  BRUHAT_STATUS_INTERNAL = 3,
  /**
   * A size guard was hit.
   */
  BRUHAT_STATUS_RESOURCE = 4,
  /**
   * A required pointer argument was null.
   */
  BRUHAT_STATUS_NULL_ARGUMENT = 5,
} BruhatStatus;

/**
 * Opaque permutation handle.
 */
typedef struct BruhatPerm BruhatPerm;

/**
 * Opaque word handle.
 */
typedef struct BruhatWord BruhatWord;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the last failed call on this thread, or null. Valid
 * until the next call into the library on this thread.
 */
const char *bruhat_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void bruhat_string_free(char *s);

/**
 * Parses a comma-separated window such as `2,5,4,1,6,3`.
 *
 * # Safety
 * `s` must be a NUL-terminated string and `out_perm` a valid pointer.
 */
enum BruhatStatus bruhat_perm_parse(const char *s, struct BruhatPerm **out_perm);

/**
 * # Safety
 * `p` must be null or a handle from this library, not yet freed.
 */
void bruhat_perm_free(struct BruhatPerm *p);

/**
 * The window of `p` as text, or null if `p` is null.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
char *bruhat_perm_to_string(const struct BruhatPerm *p);

/**
 * # Safety
 * `z` must be a live handle and `len` a valid pointer.
 */
enum BruhatStatus bruhat_universal_length(const struct BruhatPerm *z, size_t *len);

/**
 * # Safety
 * `u`, `w` must be live handles and `result` a valid pointer.
 */
enum BruhatStatus bruhat_leq_k(const struct BruhatPerm *u,
                               const struct BruhatPerm *w,
                               size_t k,
                               bool *result);

/**
 * Number of reduced words of `z`, which is the number of maximal chains of
 * its interval.
 *
 * # Safety
 * `z` must be a live handle and `count` a valid pointer.
 */
enum BruhatStatus bruhat_reduced_word_count(const struct BruhatPerm *z, uint64_t *count);

/**
 * `c_λ(z)` for the partition with `len` parts starting at `parts`.
 *
 * # Safety
 * `parts` must point to `len` readable values (or be null with `len` 0),
 * `z` must be a live handle and `value` a valid pointer.
 */
enum BruhatStatus bruhat_c_constant(const struct BruhatPerm *z,
                                    const size_t *parts,
                                    size_t len,
                                    int64_t *value);

/**
 * Writes up to `cap` coefficients of `P_n(t)`, constant term first, and
 * stores the full count in `len`. Call with `cap` 0 to size the buffer.
 *
 * # Safety
 * `coeffs` must have room for `cap` values (or be null with `cap` 0) and
 * `len` must be a valid pointer.
 */
enum BruhatStatus bruhat_rank_polynomial(size_t n, int64_t *coeffs, size_t cap, size_t *len);

/**
 * Parses a word such as `u[3,4] u[1,4]`, written last factor first unless
 * `application_order` is set.
 *
 * # Safety
 * `s` must be a NUL-terminated string and `out_word` a valid pointer.
 */
enum BruhatStatus bruhat_word_parse(const char *s,
                                    bool application_order,
                                    struct BruhatWord **out_word);

/**
 * # Safety
 * `w` must be null or a handle from this library, not yet freed.
 */
void bruhat_word_free(struct BruhatWord *w);

/**
 * # Safety
 * `w` must be null or a live handle.
 */
char *bruhat_word_to_string(const struct BruhatWord *w, bool application_order);

/**
 * Evaluates `w` in the monoid. A zero word yields [`BruhatStatus::Domain`].
 *
 * # Safety
 * `w` must be a live handle and `out_perm` a valid pointer.
 */
enum BruhatStatus bruhat_word_evaluate(const struct BruhatWord *w, struct BruhatPerm **out_perm);

/**
 * Rewrites a word of shape `(1,n)` into shape `(n,1)`.
 *
 * # Safety
 * `w` must be a live handle and `out_word` a valid pointer.
 */
enum BruhatStatus bruhat_word_insert(const struct BruhatWord *w, struct BruhatWord **out_word);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BRUHAT_H */

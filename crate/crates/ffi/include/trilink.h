/* C interface for the trilink library. */

#ifndef TRILINK_H
#define TRILINK_H

#pragma once

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code of a fallible call. Values match the CLI exit codes.
 */
typedef enum TlStatus {
  TL_STATUS_OK = 0,
  /**
   * A required pointer argument was null, or a string was not UTF-8.
   */
  TL_STATUS_NULL_ARGUMENT = 1,
  /**
   * Malformed input: word text, strand count, or sequence file syntax.
   */
  TL_STATUS_PARSE = 2,
  /**
   * A precondition failed (non-pure word, m < 3, negative n, ...).
   */
  TL_STATUS_PRECONDITION = 3,
  /**
   * The two words do not commute as braid-group elements.
   */
  TL_STATUS_NON_COMMUTING = 4,
  /**
   * Formula and sequence tensors disagree.
   */
  TL_STATUS_DISAGREEMENT = 5,
  /**
   * A sequence move does not apply or recorded words do not replay.
   */
  TL_STATUS_INVALID_SEQUENCE = 6,
} TlStatus;

/**
 * Opaque handle to a braid word.
 */
typedef struct TlWord TlWord;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a braid word from the text format (whitespace/comma-separated
 * nonzero integers) on `m` strands.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string; `out` must be writable.
 */
enum TlStatus tl_word_parse(uint32_t m, const char *text, struct TlWord **out);

/**
 * Frees a word handle. Null is ignored.
 *
 * # Safety
 * `word` must be null or a pointer returned by this library, not yet freed.
 */
void tl_word_free(struct TlWord *word);

/**
 * Frees a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void tl_string_free(char *s);

/**
 * Message of the most recent failure on this thread, or null. The caller
 * frees it with `tl_string_free`.
 */
char *tl_last_error(void);

/**
 * Strand count of a word, or 0 for null.
 *
 * # Safety
 * `word` must be null or a valid handle.
 */
uint32_t tl_word_strands(const struct TlWord *word);

/**
 * Letter count of a word, or 0 for null.
 *
 * # Safety
 * `word` must be null or a valid handle.
 */
uintptr_t tl_word_len(const struct TlWord *word);

/**
 * Renders a word in the text format.
 *
 * # Safety
 * `word` must be a valid handle; `out` must be writable.
 */
enum TlStatus tl_word_text(const struct TlWord *word, char **out);

/**
 * Writes whether the word is pure (identity strand permutation).
 *
 * # Safety
 * `word` must be a valid handle; `out` must be writable.
 */
enum TlStatus tl_word_is_pure(const struct TlWord *word, bool *out);

/**
 * Concatenation `a·b` (no cancellation).
 *
 * # Safety
 * `a` and `b` must be valid handles; `out` must be writable.
 */
enum TlStatus tl_word_compose(const struct TlWord *a, const struct TlWord *b, struct TlWord **out);

/**
 * The inverse word: letters reversed, signs flipped.
 *
 * # Safety
 * `word` must be a valid handle; `out` must be writable.
 */
enum TlStatus tl_word_inverse(const struct TlWord *word, struct TlWord **out);

/**
 * The full twist `Δ^n` on `m` strands.
 *
 * # Safety
 * `out` must be writable.
 */
enum TlStatus tl_full_twist(uint32_t m, int64_t n, struct TlWord **out);

/**
 * Writes whether two words represent the same braid (free-group action).
 *
 * # Safety
 * `a` and `b` must be valid handles; `out` must be writable.
 */
enum TlStatus tl_words_equal(const struct TlWord *a, const struct TlWord *b, bool *out);

/**
 * Writes whether `a·b = b·a` as braid-group elements.
 *
 * # Safety
 * `a` and `b` must be valid handles; `out` must be writable.
 */
enum TlStatus tl_words_commute(const struct TlWord *a, const struct TlWord *b, bool *out);

/**
 * Linking matrix of a pure braid closure as canonical JSON.
 *
 * # Safety
 * `word` must be a valid handle; `out` must be writable.
 */
enum TlStatus tl_linking_json(const struct TlWord *word, char **out);

/**
 * Triple linking tensor of a commuting pure pair as canonical JSON.
 *
 * # Safety
 * `a` and `b` must be valid handles; `out` must be writable.
 */
enum TlStatus tl_tlk_json(const struct TlWord *a, const struct TlWord *b, char **out);

/**
 * Bound report for the family `(b, Δ^n)` as canonical JSON.
 *
 * # Safety
 * `b` must be a valid handle; `out` must be writable.
 */
enum TlStatus tl_bound_json(const struct TlWord *b, int64_t n, char **out);

/**
 * Builds the sequence `b·Δ^n → Δ^n·b`, extracts its tensor, and compares it
 * with the closed formula. Writes `{"verdict", "r3_count", ...}` JSON and
 * returns `Disagreement` if the tensors differ.
 *
 * # Safety
 * `b` must be a valid handle; `out` must be writable.
 */
enum TlStatus tl_oracle_json(const struct TlWord *b, int64_t n, char **out);

/**
 * Replays and validates a JSON Lines sequence file, writing the validation
 * report as JSON.
 *
 * # Safety
 * `path` must be a valid NUL-terminated string; `out` must be writable.
 */
enum TlStatus tl_verify_json(const char *path, bool audit, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TRILINK_H */

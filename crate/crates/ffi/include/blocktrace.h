#ifndef BLOCKTRACE_H
#define BLOCKTRACE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum BtStatus {
  BT_STATUS_OK = 0,
  BT_STATUS_NULL_POINTER = 1,
  BT_STATUS_DIMENSION_MISMATCH = 2,
  BT_STATUS_NOT_SQUARE = 3,
  BT_STATUS_NOT_HERMITIAN = 4,
  BT_STATUS_NO_CONVERGENCE = 5,
  BT_STATUS_INVALID_ARGUMENT = 6,
  BT_STATUS_UNKNOWN_CASE = 7,
  BT_STATUS_WRONG_INPUT_CLASS = 8,
  BT_STATUS_PRECONDITION = 9,
  BT_STATUS_OVERFLOW = 10,
  BT_STATUS_PARSE = 11,
  BT_STATUS_IO = 12,
  BT_STATUS_PANIC = 13,
} BtStatus;

/**
 * Opaque dense complex matrix.
 */
typedef struct BtMatrix BtMatrix;

/**
 * Outcome of an order check: `holds` iff `witness >= -tolerance_used`.
 */
typedef struct BtVerdict {
  bool holds;
  double witness;
  double tolerance_used;
} BtVerdict;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *bt_version(void);

/**
 * Message for the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next call on the same thread.
 */
const char *bt_last_error(void);

/**
 * Creates a `rows x cols` matrix from `2 * rows * cols` interleaved doubles,
 * or a zero matrix when `data` is null.
 *
 * # Safety
 * `data` must be null or point to `2 * rows * cols` readable doubles.
 */
enum BtStatus bt_matrix_new(size_t rows, size_t cols, const double *data, struct BtMatrix **out);

/**
 * Releases a matrix; null is ignored.
 *
 * # Safety
 * `m` must be null or a handle from this library not yet freed.
 */
void bt_matrix_free(struct BtMatrix *m);

/**
 * Row count, or 0 for a null handle.
 *
 * # Safety
 * `m` must be null or a live handle.
 */
size_t bt_matrix_rows(const struct BtMatrix *m);

/**
 * Column count, or 0 for a null handle.
 *
 * # Safety
 * `m` must be null or a live handle.
 */
size_t bt_matrix_cols(const struct BtMatrix *m);

/**
 * Copies the entries as interleaved `(re, im)` pairs; `len` counts doubles.
 *
 * # Safety
 * `m` must be a live handle and `out` must hold `len` writable doubles.
 */
enum BtStatus bt_matrix_data(const struct BtMatrix *m, double *out, size_t len);

/**
 * `A^τ` of `a` viewed as an `m x m` block matrix with `n x n` blocks.
 *
 * # Safety
 * `a` must be a live handle and `out` a writable pointer.
 */
enum BtStatus bt_partial_transpose(const struct BtMatrix *a,
                                   size_t m,
                                   size_t n,
                                   struct BtMatrix **out);

/**
 * `tr1 A`, the `n x n` sum of diagonal blocks.
 *
 * # Safety
 * `a` must be a live handle and `out` a writable pointer.
 */
enum BtStatus bt_partial_trace_1(const struct BtMatrix *a,
                                 size_t m,
                                 size_t n,
                                 struct BtMatrix **out);

/**
 * `tr2 A`, the `m x m` matrix of block traces.
 *
 * # Safety
 * `a` must be a live handle and `out` a writable pointer.
 */
enum BtStatus bt_partial_trace_2(const struct BtMatrix *a,
                                 size_t m,
                                 size_t n,
                                 struct BtMatrix **out);

/**
 * The reshuffled matrix, an `n x n` block matrix with `m x m` blocks.
 *
 * # Safety
 * `a` must be a live handle and `out` a writable pointer.
 */
enum BtStatus bt_reshuffle(const struct BtMatrix *a, size_t m, size_t n, struct BtMatrix **out);

/**
 * Eigenvalues of a Hermitian matrix in non-increasing order; `len` must equal
 * the dimension.
 *
 * # Safety
 * `a` must be a live handle and `out` must hold `len` writable doubles.
 */
enum BtStatus bt_hermitian_eigvals(const struct BtMatrix *a, double *out, size_t len);

/**
 * Singular values in non-increasing order; `len` must equal
 * `min(rows, cols)`.
 *
 * # Safety
 * `a` must be a live handle and `out` must hold `len` writable doubles.
 */
enum BtStatus bt_singular_values(const struct BtMatrix *a, double *out, size_t len);

/**
 * PSD test with relative tolerance `tol`.
 *
 * # Safety
 * `a` must be a live handle and `out` writable.
 */
enum BtStatus bt_is_psd(const struct BtMatrix *a, double tol, struct BtVerdict *out);

/**
 * PPT test of `a` as an `m x m` block matrix with `n x n` blocks.
 *
 * # Safety
 * `a` must be a live handle and `out` writable.
 */
enum BtStatus bt_is_ppt(const struct BtMatrix *a,
                        size_t m,
                        size_t n,
                        double tol,
                        struct BtVerdict *out);

/**
 * Generates an instance of `kind` and writes its JSON encoding.
 *
 * # Safety
 * `kind` must be a NUL-terminated string and `out_json` writable.
 */
enum BtStatus bt_gen(const char *kind, size_t m, size_t n, uint64_t seed, char **out_json);

/**
 * Checks one registry case on a JSON-encoded instance and writes the JSON
 * slack report. `Ok` means the check ran; the verdict is in the report.
 *
 * # Safety
 * String arguments must be NUL-terminated and `out_json` writable.
 */
enum BtStatus bt_check_case(const char *case_id,
                            const char *instance_json,
                            double tol,
                            char **out_json);

/**
 * Runs a suite from a JSON config
 * `{"cases": [...], "dims": [[m, n], ...], "trials": T, "seed": S, "tol": t}`
 * (`cases`, `seed` and `tol` optional) and writes the JSON report.
 *
 * # Safety
 * `config_json` must be NUL-terminated and `out_json` writable.
 */
enum BtStatus bt_run_suite(const char *config_json, char **out_json);

/**
 * Releases a string returned by this library; null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library not yet freed.
 */
void bt_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BLOCKTRACE_H */

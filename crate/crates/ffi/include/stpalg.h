#ifndef STPALG_H
#define STPALG_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum StpStatus {
  STP_STATUS_OK = 0,
  STP_STATUS_NULL_POINTER = 1,
  STP_STATUS_PANIC = 2,
  STP_STATUS_KIND_MISMATCH = 3,
  STP_STATUS_EMPTY_MATRIX = 4,
  STP_STATUS_ENTRY_COUNT = 5,
  STP_STATUS_DIMENSION_MISMATCH = 6,
  STP_STATUS_MU_MISMATCH = 7,
  STP_STATUS_NOT_SQUARE = 8,
  STP_STATUS_NOT_SQUARE_CLASS = 9,
  STP_STATUS_NOT_EQUIVALENT = 10,
  STP_STATUS_INDIVISIBLE_SHAPE = 11,
  STP_STATUS_LOG_DOMAIN = 12,
  STP_STATUS_NON_RATIONAL = 13,
  STP_STATUS_NOT_COLUMN = 14,
  STP_STATUS_NOT_SUPERIOR = 15,
  STP_STATUS_LEAF_NOT_DIVISIBLE = 16,
  STP_STATUS_NOT_INVARIANT_DIM = 17,
  STP_STATUS_UNBOUNDED = 18,
  STP_STATUS_NOT_PERMUTATION_MATRIX = 19,
  STP_STATUS_INVALID_PERMUTATION = 20,
  STP_STATUS_SINGULAR = 21,
  STP_STATUS_NON_FINITE = 22,
  STP_STATUS_OVERFLOW = 23,
  STP_STATUS_NO_CONVERGENCE = 24,
  STP_STATUS_PARSE = 25,
  STP_STATUS_RAGGED_ROWS = 26,
  STP_STATUS_INVALID_ARGUMENT = 27,
} StpStatus;

typedef enum StpSide {
  STP_SIDE_LEFT = 0,
  STP_SIDE_RIGHT = 1,
} StpSide;

/**
 * Opaque matrix handle.
 */
typedef struct StpMatrix StpMatrix;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. The pointer is
 * valid until the next `stp_*` call on the same thread.
 */
const char *stp_last_error_message(void);

/**
 * Parses the text matrix format from a NUL-terminated UTF-8 string.
 *
 * # Safety
 * `text` must be a valid C string and `out` a valid pointer.
 */
enum StpStatus stp_matrix_parse(const char *text, struct StpMatrix **out);

/**
 * Builds an exact matrix from row-major numerators and denominators.
 *
 * # Safety
 * `num` and `den` must each point to `rows * cols` values.
 */
enum StpStatus stp_matrix_new_rational(size_t rows,
                                       size_t cols,
                                       const int64_t *num,
                                       const int64_t *den,
                                       struct StpMatrix **out);

/**
 * Builds a complex matrix from row-major real and imaginary parts.
 *
 * # Safety
 * `re` and `im` must each point to `rows * cols` values.
 */
enum StpStatus stp_matrix_new_complex(size_t rows,
                                      size_t cols,
                                      const double *re,
                                      const double *im,
                                      struct StpMatrix **out);

/**
 * # Safety
 * `m` must come from this library and not have been freed; NULL is ignored.
 */
void stp_matrix_free(struct StpMatrix *m);

/**
 * # Safety
 * `m` must be a live handle or NULL (which gives 0).
 */
size_t stp_matrix_rows(const struct StpMatrix *m);

/**
 * # Safety
 * `m` must be a live handle or NULL (which gives 0).
 */
size_t stp_matrix_cols(const struct StpMatrix *m);

/**
 * 1 for an exact rational matrix, 0 for complex or NULL.
 *
 * # Safety
 * `m` must be a live handle or NULL.
 */
int32_t stp_matrix_is_rational(const struct StpMatrix *m);

/**
 * Entry `(i, j)` as a complex double.
 *
 * # Safety
 * `m` must be a live handle; `re` and `im` must be valid pointers.
 */
enum StpStatus stp_matrix_get(const struct StpMatrix *m,
                              size_t i,
                              size_t j,
                              double *re,
                              double *im);

/**
 * The matrix in the text format; release with `stp_string_free`. NULL on
 * a NULL handle.
 *
 * # Safety
 * `m` must be a live handle or NULL.
 */
char *stp_matrix_to_string(const struct StpMatrix *m);

/**
 * # Safety
 * `s` must come from `stp_matrix_to_string` or be NULL.
 */
void stp_string_free(char *s);

/**
 * Left (or right) semi-tensor product.
 *
 * # Safety
 * `a`, `b` must be live handles and `out` a valid pointer.
 */
enum StpStatus stp_stp(const struct StpMatrix *a,
                       const struct StpMatrix *b,
                       enum StpSide side,
                       struct StpMatrix **out);

/**
 * Semi-tensor addition.
 *
 * # Safety
 * `a`, `b` must be live handles and `out` a valid pointer.
 */
enum StpStatus stp_sta(const struct StpMatrix *a,
                       const struct StpMatrix *b,
                       enum StpSide side,
                       struct StpMatrix **out);

/**
 * # Safety
 * `a`, `b` must be live handles and `out` a valid pointer.
 */
enum StpStatus stp_kron(const struct StpMatrix *a,
                        const struct StpMatrix *b,
                        struct StpMatrix **out);

/**
 * Swap matrix `W[m, n]`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum StpStatus stp_swap(size_t m, size_t n, struct StpMatrix **out);

/**
 * Vector product of a matrix with a column.
 *
 * # Safety
 * `a`, `x` must be live handles and `out` a valid pointer.
 */
enum StpStatus stp_vprod(const struct StpMatrix *a,
                         const struct StpMatrix *x,
                         enum StpSide side,
                         struct StpMatrix **out);

/**
 * Irreducible root of the class of `a`.
 *
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
enum StpStatus stp_root(const struct StpMatrix *a,
                        enum StpSide side,
                        double tol,
                        struct StpMatrix **out);

/**
 * Writes 1 to `result` when the matrices are equivalent, 0 otherwise.
 *
 * # Safety
 * `a`, `b` must be live handles and `result` a valid pointer.
 */
enum StpStatus stp_equivalent(const struct StpMatrix *a,
                              const struct StpMatrix *b,
                              enum StpSide side,
                              double tol,
                              int32_t *result);

/**
 * Square realization of `a` on the invariant subspace of dimension `t`.
 *
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
enum StpStatus stp_realization(const struct StpMatrix *a, size_t t, struct StpMatrix **out);

/**
 * Eigenvalues on the invariant subspace of dimension `t`, as a complex
 * column sorted by real then imaginary part.
 *
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
enum StpStatus stp_spectrum(const struct StpMatrix *a, size_t t, struct StpMatrix **out);

/**
 * Minimal annihilator of `x` under `a`, as a 1-row rational matrix of
 * coefficients in ascending degree.
 *
 * # Safety
 * `a`, `x` must be live handles and `out` a valid pointer.
 */
enum StpStatus stp_annihilator(const struct StpMatrix *a,
                               const struct StpMatrix *x,
                               size_t max_steps,
                               struct StpMatrix **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STPALG_H */

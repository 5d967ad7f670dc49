#ifndef NCENTERED_H
#define NCENTERED_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Result codes of every fallible call.
 */
typedef enum NcStatus {
  NC_STATUS_OK = 0,
  NC_STATUS_NULL_POINTER = 1,
  NC_STATUS_INVALID_ARGUMENT = 2,
  NC_STATUS_DIMENSION = 3,
  NC_STATUS_NON_FINITE = 4,
  NC_STATUS_NOT_SQUARE = 5,
  NC_STATUS_PRECONDITION = 6,
  NC_STATUS_BUFFER_TOO_SMALL = 7,
  NC_STATUS_INTERNAL = 8,
} NcStatus;

/*
 Opaque matrix handle.
 */
typedef struct NcOperator NcOperator;

/*
 Relative tolerances; see [`nc_tolerances_default`].
 */
typedef struct NcTolerances {
  double rank_rel_tol;
  double zero_rel_tol;
  double equality_rel_tol;
} NcTolerances;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Default tolerances: rank 1e-12, vanishing 1e-9, equality 1e-9.
 */
struct NcTolerances nc_tolerances_default(void);

/*
 Message of the last failed call on this thread, or NULL after a
 successful call. Valid until the next call on the same thread.
 */
const char *nc_last_error(void);

/*
 Creates a `rows x cols` operator from `2 * rows * cols` doubles holding
 interleaved `(re, im)` pairs in row-major order.

 # Safety
 `data` must point to `2 * rows * cols` readable doubles; `out` must be
 writable.
 */
enum NcStatus nc_operator_new(size_t rows,
                              size_t cols,
                              const double *data,
                              struct NcOperator **out);

/*
 Releases an operator. NULL is ignored.

 # Safety
 `t` must come from this library and not be freed twice.
 */
void nc_operator_free(struct NcOperator *t);

/*
 Number of rows, 0 for NULL.

 # Safety
 `t` must be NULL or a live handle.
 */
size_t nc_operator_rows(const struct NcOperator *t);

/*
 Number of columns, 0 for NULL.

 # Safety
 `t` must be NULL or a live handle.
 */
size_t nc_operator_cols(const struct NcOperator *t);

/*
 Copies the entries into `out` in the layout of [`nc_operator_new`].
 `len` is the capacity of `out` in doubles.

 # Safety
 `out` must point to `len` writable doubles.
 */
enum NcStatus nc_operator_copy_data(const struct NcOperator *t, double *out, size_t len);

/*
 Polar decomposition `T = U |T|`. `tol` may be NULL for the defaults.

 # Safety
 `t` must be a live handle; `u` and `p` must be writable.
 */
enum NcStatus nc_polar(const struct NcOperator *t,
                       const struct NcTolerances *tol,
                       struct NcOperator **u,
                       struct NcOperator **p);

/*
 Modulus `|T| = (T*T)^{1/2}`.

 # Safety
 `t` must be a live handle; `out` must be writable.
 */
enum NcStatus nc_abs_value(const struct NcOperator *t,
                           const struct NcTolerances *tol,
                           struct NcOperator **out);

/*
 Moore-Penrose inverse.

 # Safety
 `t` must be a live handle; `out` must be writable.
 */
enum NcStatus nc_moore_penrose(const struct NcOperator *t,
                               const struct NcTolerances *tol,
                               struct NcOperator **out);

/*
 Whether `T*T` commutes with `TT*`.

 # Safety
 `t` must be a live handle; `out` must be writable.
 */
enum NcStatus nc_is_binormal(const struct NcOperator *t, const struct NcTolerances *tol, bool *out);

/*
 Largest `n <= max_n` for which `T` is verified `n`-centered. When
 `oracle_agrees` is not NULL it receives whether the definitional check
 confirms the order.

 # Safety
 `t` must be a live handle; `order` must be writable; `oracle_agrees`
 must be NULL or writable.
 */
enum NcStatus nc_centered_order(const struct NcOperator *t,
                                size_t max_n,
                                const struct NcTolerances *tol,
                                size_t *order,
                                bool *oracle_agrees);

/*
 The block weighted shift that is `n`-centered but not `(n+1)`-centered,
 truncated to `blocks` blocks (0 selects the default `n + 3`).

 # Safety
 `out` must be writable.
 */
enum NcStatus nc_counterexample(size_t n, size_t blocks, struct NcOperator **out);

/*
 Generalized Aluthge transform `|T|^alpha U |T|^beta`.

 # Safety
 `t` must be a live handle; `out` must be writable.
 */
enum NcStatus nc_aluthge(const struct NcOperator *t,
                         double alpha,
                         double beta,
                         const struct NcTolerances *tol,
                         struct NcOperator **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NCENTERED_H */

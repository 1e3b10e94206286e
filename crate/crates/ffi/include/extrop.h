/* C interface to extrop: exact arithmetic and matrix algebra over the extended tropical semiring. */

#ifndef EXTROP_H
#define EXTROP_H

/* Generated from the Rust sources by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Cap on the dimension accepted by the permanent-style enumeration in
 * [`extrop_matrix_det`] with [`ExtropDetMethod::Naive`]; mirrors the CLI
 * default. The fast method has no cap.
 */
#define EXTROP_NAIVE_DET_CAP 10

/**
 * Which determinant algorithm [`extrop_matrix_det`] runs.
 */
typedef enum ExtropDetMethod {
  /**
   * Enumerate all permutations; exact count of optima, capped at
   * [`EXTROP_NAIVE_DET_CAP`].
   */
  EXTROP_DET_METHOD_NAIVE = 0,
  /**
   * Assignment-problem solver; uniqueness report collapses to
   * "unique" / "not unique" but value and tag are always exact.
   */
  EXTROP_DET_METHOD_FAST = 1,
} ExtropDetMethod;

/**
 * Result of every call in this library.
 */
typedef enum ExtropStatus {
  /**
   * Success; out-pointers have been written.
   */
  EXTROP_STATUS_OK = 0,
  /**
   * A required pointer argument was NULL.
   */
  EXTROP_STATUS_NULL_ARGUMENT = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  EXTROP_STATUS_INVALID_UTF8 = 2,
  /**
   * A scalar literal, JSON document, law id or configuration was invalid.
   */
  EXTROP_STATUS_PARSE_ERROR = 3,
  /**
   * Dimensions were unusable: not square, mismatched, out of range, or
   * past the naive determinant cap.
   */
  EXTROP_STATUS_SHAPE_ERROR = 4,
  /**
   * The matrix has determinant -inf, so no pseudo inverse exists.
   */
  EXTROP_STATUS_SINGULAR = 5,
  /**
   * A point or polynomial had the wrong number of variables.
   */
  EXTROP_STATUS_ARITY_ERROR = 6,
  /**
   * An unexpected internal failure; the out-pointers are untouched.
   */
  EXTROP_STATUS_INTERNAL_ERROR = 7,
} ExtropStatus;

/**
 * Opaque handle to a matrix over the extended tropical semiring.
 */
typedef struct ExtropMatrix ExtropMatrix;

/**
 * Opaque handle to a tropical polynomial.
 */
typedef struct ExtropPoly ExtropPoly;

/**
 * Opaque handle to a Puiseux series with rational exponents.
 */
typedef struct ExtropSeries ExtropSeries;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Releases a string returned by this library. NULL is a no-op.
 *
 * # Safety
 * `s` must be NULL or a pointer previously returned through a string
 * out-parameter of this library, not yet freed.
 */
void extrop_string_free(char *s);

/**
 * Tropical sum of two scalar literals, written to `out` as a literal.
 *
 * # Safety
 * `a` and `b` must be NUL-terminated strings; `out` must be a valid
 * pointer. The string written to `out` must be released with
 * [`extrop_string_free`].
 */
enum ExtropStatus extrop_scalar_add(const char *a, const char *b, char **out);

/**
 * Tropical product of two scalar literals, written to `out` as a literal.
 *
 * # Safety
 * Same contract as [`extrop_scalar_add`].
 */
enum ExtropStatus extrop_scalar_mul(const char *a, const char *b, char **out);

/**
 * Parses a matrix from a JSON document `{"rows": [["1", "-1"], ["2", "2v"]]}`.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer. The
 * handle written to `out` must be released with [`extrop_matrix_free`].
 */
enum ExtropStatus extrop_matrix_parse(const char *json, struct ExtropMatrix **out);

/**
 * Builds a `rows` x `cols` matrix from `rows * cols` scalar literals in
 * row-major order.
 *
 * # Safety
 * `entries` must point to `rows * cols` NUL-terminated strings; `out`
 * must be a valid pointer. The handle written to `out` must be released
 * with [`extrop_matrix_free`].
 */
enum ExtropStatus extrop_matrix_from_literals(size_t rows,
                                              size_t cols,
                                              const char *const *entries,
                                              struct ExtropMatrix **out);

/**
 * Releases a matrix handle. NULL is a no-op.
 *
 * # Safety
 * `m` must be NULL or an unfreed handle from this library.
 */
void extrop_matrix_free(struct ExtropMatrix *m);

/**
 * Writes the dimensions of `m`.
 *
 * # Safety
 * `m` must be a valid handle; `rows` and `cols` must be valid pointers.
 */
enum ExtropStatus extrop_matrix_shape(const struct ExtropMatrix *m, size_t *rows, size_t *cols);

/**
 * Writes entry `(i, j)` of `m` as a scalar literal.
 *
 * # Safety
 * `m` must be a valid handle; `out` must be a valid pointer. The string
 * written to `out` must be released with [`extrop_string_free`].
 */
enum ExtropStatus extrop_matrix_entry(const struct ExtropMatrix *m, size_t i, size_t j, char **out);

/**
 * Serializes `m` to the JSON document format accepted by
 * [`extrop_matrix_parse`].
 *
 * # Safety
 * `m` must be a valid handle; `out` must be a valid pointer. The string
 * written to `out` must be released with [`extrop_string_free`].
 */
enum ExtropStatus extrop_matrix_to_json(const struct ExtropMatrix *m, char **out);

/**
 * Entrywise tropical sum `a + b`.
 *
 * # Safety
 * `a` and `b` must be valid handles of equal shape; `out` must be a valid
 * pointer. The handle written to `out` must be released with
 * [`extrop_matrix_free`].
 */
enum ExtropStatus extrop_matrix_add(const struct ExtropMatrix *a,
                                    const struct ExtropMatrix *b,
                                    struct ExtropMatrix **out);

/**
 * Tropical matrix product `a * b`.
 *
 * # Safety
 * Same contract as [`extrop_matrix_add`], with inner dimensions agreeing.
 */
enum ExtropStatus extrop_matrix_mul(const struct ExtropMatrix *a,
                                    const struct ExtropMatrix *b,
                                    struct ExtropMatrix **out);

/**
 * Transpose of `m`.
 *
 * # Safety
 * `m` must be a valid handle; `out` must be a valid pointer. The handle
 * written to `out` must be released with [`extrop_matrix_free`].
 */
enum ExtropStatus extrop_matrix_transpose(const struct ExtropMatrix *m, struct ExtropMatrix **out);

/**
 * Tropical determinant of `m`, written to `out` as a JSON document
 * `{"value": "4", "tag": "real", "optimal_count": 1, "uses_nu_entry": false}`
 * where `optimal_count` is `1`, `2` or `">=2"`.
 *
 * With [`ExtropDetMethod::Naive`] the dimension is capped at
 * [`EXTROP_NAIVE_DET_CAP`]; past the cap the call fails with `ShapeError`.
 *
 * # Safety
 * `m` must be a valid handle; `out` must be a valid pointer. The string
 * written to `out` must be released with [`extrop_string_free`].
 */
enum ExtropStatus extrop_matrix_det(const struct ExtropMatrix *m,
                                    enum ExtropDetMethod method,
                                    char **out);

/**
 * Writes whether `m` is regular (determinant is a real, untagged value).
 *
 * # Safety
 * `m` must be a valid handle; `out` must be a valid pointer.
 */
enum ExtropStatus extrop_matrix_is_regular(const struct ExtropMatrix *m, bool *out);

/**
 * Adjoint of `m` (matrix of cofactor determinants, transposed).
 *
 * # Safety
 * Same contract as [`extrop_matrix_transpose`].
 */
enum ExtropStatus extrop_matrix_adjoint(const struct ExtropMatrix *m, struct ExtropMatrix **out);

/**
 * Pseudo inverse of `m`: the adjoint divided by the determinant. Fails
 * with `Singular` when the determinant is -inf.
 *
 * # Safety
 * Same contract as [`extrop_matrix_transpose`].
 */
enum ExtropStatus extrop_matrix_pseudo_inverse(const struct ExtropMatrix *m,
                                               struct ExtropMatrix **out);

/**
 * Writes whether `m` is a pseudo unit: real 0 on the diagonal, ghost or
 * -inf entries bounded by 0 off it.
 *
 * # Safety
 * `m` must be a valid handle; `out` must be a valid pointer.
 */
enum ExtropStatus extrop_matrix_is_pseudo_unit(const struct ExtropMatrix *m, bool *out);

/**
 * Writes whether `a` and `b` form an inverse pair: both products are
 * pseudo units that square to themselves.
 *
 * # Safety
 * `a` and `b` must be valid handles; `out` must be a valid pointer.
 */
enum ExtropStatus extrop_matrix_check_pair(const struct ExtropMatrix *a,
                                           const struct ExtropMatrix *b,
                                           bool *out);

/**
 * Writes the known law identifiers as a JSON array of strings.
 *
 * # Safety
 * `out` must be a valid pointer. The string written to `out` must be
 * released with [`extrop_string_free`].
 */
enum ExtropStatus extrop_law_ids(char **out);

/**
 * Runs the law `law_id` on `count` generated instances with matrix
 * dimensions drawn from `dim_lo..=dim_hi`, writing the number of instances
 * checked and the number that failed. Unknown ids and unusable
 * configurations fail with `ParseError`.
 *
 * # Safety
 * `law_id` must be a NUL-terminated string; `out_total` and
 * `out_failures` must be valid pointers.
 */
enum ExtropStatus extrop_run_law(const char *law_id,
                                 uint64_t seed,
                                 size_t count,
                                 size_t dim_lo,
                                 size_t dim_hi,
                                 size_t *out_total,
                                 size_t *out_failures);

/**
 * Parses a tropical polynomial from a JSON document
 * `{"vars": 2, "monomials": [{"exp": [1, 0], "coef": "0"}]}`.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer. The
 * handle written to `out` must be released with [`extrop_poly_free`].
 */
enum ExtropStatus extrop_poly_parse(const char *json, struct ExtropPoly **out);

/**
 * Releases a polynomial handle. NULL is a no-op.
 *
 * # Safety
 * `p` must be NULL or an unfreed handle from this library.
 */
void extrop_poly_free(struct ExtropPoly *p);

/**
 * Writes the number of variables of `p`.
 *
 * # Safety
 * `p` must be a valid handle; `out` must be a valid pointer.
 */
enum ExtropStatus extrop_poly_num_vars(const struct ExtropPoly *p, size_t *out);

/**
 * Evaluates `p` at a point given as `len` scalar literals. Writes the
 * value as a literal and whether the point lies in the corner locus (the
 * evaluation is a ghost or -inf).
 *
 * # Safety
 * `p` must be a valid handle; `point` must hold `len` NUL-terminated
 * strings; `out_value` and `out_in_zero_set` must be valid pointers. The
 * string written to `out_value` must be released with
 * [`extrop_string_free`].
 */
enum ExtropStatus extrop_poly_eval(const struct ExtropPoly *p,
                                   const char *const *point,
                                   size_t len,
                                   char **out_value,
                                   bool *out_in_zero_set);

/**
 * Parses a Puiseux series from a JSON document
 * `{"terms": [{"exp": "-2", "coef": "1"}]}` with rational exponents.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer. The
 * handle written to `out` must be released with [`extrop_series_free`].
 */
enum ExtropStatus extrop_series_parse(const char *json, struct ExtropSeries **out);

/**
 * Releases a series handle. NULL is a no-op.
 *
 * # Safety
 * `s` must be NULL or an unfreed handle from this library.
 */
void extrop_series_free(struct ExtropSeries *s);

/**
 * Writes the valuation of `s` (negated order of the series) as a scalar
 * literal; the zero series has valuation `-inf`.
 *
 * # Safety
 * `s` must be a valid handle; `out` must be a valid pointer. The string
 * written to `out` must be released with [`extrop_string_free`].
 */
enum ExtropStatus extrop_series_val(const struct ExtropSeries *s, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EXTROP_H */

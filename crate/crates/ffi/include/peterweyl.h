#ifndef PETERWEYL_H
#define PETERWEYL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes. Zero is success.
enum PwStatus
#if defined(__cplusplus) || __STDC_VERSION__ >= 202311L
  : int32_t
#endif // defined(__cplusplus) || __STDC_VERSION__ >= 202311L
 {
  PwStatus_Ok = 0,
  PwStatus_NullPointer = 1,
  PwStatus_InvalidUtf8 = 2,
  PwStatus_Parse = 3,
  PwStatus_InvalidLabel = 4,
  PwStatus_InvalidArgument = 5,
  PwStatus_AlgebraMismatch = 6,
  PwStatus_DivisionByZero = 7,
  PwStatus_NotRegularAtOne = 8,
  PwStatus_Singular = 9,
  PwStatus_DimensionMismatch = 10,
  PwStatus_Consistency = 11,
  PwStatus_Panic = 12,
};
#ifndef __cplusplus
#if __STDC_VERSION__ >= 202311L
typedef enum PwStatus PwStatus;
#else
typedef int32_t PwStatus;
#endif // __STDC_VERSION__ >= 202311L
#endif // __cplusplus

// A quantized function algebra `O_q(G)`.
typedef struct PwAlgebra PwAlgebra;

// An element of `O_q(G)` in the Peter-Weyl basis.
typedef struct PwElement PwElement;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or null. The pointer stays
// valid until the next call into this library on the same thread.
const char *pw_last_error(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void pw_string_free(char *s);

// Opens `O_q(G)` for `name`, one of `sl2` or `glK` with `K >= 2`.
//
// # Safety
// `name` must be a NUL-terminated string; `out` must be writable.
int32_t pw_algebra_new(const char *name, struct PwAlgebra **out);

// # Safety
// `a` must be null or a live handle from [`pw_algebra_new`].
void pw_algebra_free(struct PwAlgebra *a);

// The basis element `f^λ_{ij}`; `weights` is a JSON integer array.
//
// # Safety
// Pointers must be valid; `out` must be writable.
int32_t pw_element_basis(const struct PwAlgebra *alg,
                         const char *weights,
                         size_t i,
                         size_t j,
                         struct PwElement **out);

// The matrix coefficient of the vector representation at `(i, j)`.
//
// # Safety
// Pointers must be valid; `out` must be writable.
int32_t pw_element_generator(const struct PwAlgebra *alg,
                             size_t i,
                             size_t j,
                             struct PwElement **out);

// Parses `[{"lambda": [..], "i": .., "j": .., "coeff": ".."}, ...]`.
//
// # Safety
// Pointers must be valid; `out` must be writable.
int32_t pw_element_from_json(const struct PwAlgebra *alg, const char *text, struct PwElement **out);

// # Safety
// `e` must be null or a live element handle.
void pw_element_free(struct PwElement *e);

// `out = a + b`.
//
// # Safety
// Pointers must be valid; `out` must be writable.
int32_t pw_element_add(const struct PwElement *a,
                       const struct PwElement *b,
                       struct PwElement **out);

// `out = c · a` for a scalar expression `c` in `q`.
//
// # Safety
// Pointers must be valid; `out` must be writable.
int32_t pw_element_scale(const struct PwElement *a, const char *c, struct PwElement **out);

// `out = a · b` in `alg`.
//
// # Safety
// Pointers must be valid; `out` must be writable.
int32_t pw_element_multiply(const struct PwAlgebra *alg,
                            const struct PwElement *a,
                            const struct PwElement *b,
                            struct PwElement **out);

// Writes 1 to `out` when the elements are equal, 0 otherwise.
//
// # Safety
// Pointers must be valid; `out` must be writable.
int32_t pw_element_equal(const struct PwElement *a, const struct PwElement *b, int32_t *out);

// The element as JSON.
//
// # Safety
// Pointers must be valid; `out` must be writable.
int32_t pw_element_to_json(const struct PwElement *e, char **out);

// `Δ(e)` as JSON `[{"left", "right", "coeff"}]`.
//
// # Safety
// Pointers must be valid; `out` must be writable.
int32_t pw_element_comultiply_json(const struct PwElement *e, char **out);

// `ε(e)` in canonical scalar form.
//
// # Safety
// Pointers must be valid; `out` must be writable.
int32_t pw_element_counit(const struct PwElement *e, char **out);

// The element as a polynomial in the vector-representation coefficients.
//
// # Safety
// Pointers must be valid; `out` must be writable.
int32_t pw_element_pretty(const struct PwAlgebra *alg, const struct PwElement *e, char **out);

// Structure constants of `f^λ · f^μ` as JSON; weights are JSON integer arrays.
//
// # Safety
// Pointers must be valid; `out` must be writable.
int32_t pw_structure_constants_json(const struct PwAlgebra *alg,
                                    const char *lambda,
                                    const char *mu,
                                    char **out);

// 3j and dual 3j symbols of `λ ⊗ μ` as JSON.
//
// # Safety
// Pointers must be valid; `out` must be writable.
int32_t pw_threej_json(const struct PwAlgebra *alg, const char *lambda, const char *mu, char **out);

// The quadratic relations of `O_q(M_k)`, one `... = 0` per line.
//
// # Safety
// `out` must be writable.
int32_t pw_frt_text(size_t k, char **out);

// Canonical form of a scalar expression in `q`.
//
// # Safety
// Pointers must be valid; `out` must be writable.
int32_t pw_scalar_normalize(const char *expr, char **out);

// Value of a scalar expression at `q = 1` as a reduced fraction.
//
// # Safety
// Pointers must be valid; `out` must be writable.
int32_t pw_scalar_eval_at_one(const char *expr, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PETERWEYL_H */

#ifndef OSP_KOSTKA_H
#define OSP_KOSTKA_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Result codes. Zero is success.
typedef enum OspStatus {
  OSP_STATUS_OK = 0,
  OSP_STATUS_NULL_POINTER = 1,
  OSP_STATUS_INVALID_ARGUMENT = 2,
  OSP_STATUS_LIMIT_EXCEEDED = 3,
  OSP_STATUS_OVERFLOW = 4,
  OSP_STATUS_INTERNAL = 5,
  OSP_STATUS_PANIC = 6,
} OspStatus;

// A rank-`n` calculator with its partition-function cache. Safe to share
// between threads.
typedef struct OspEngine OspEngine;

// A Laurent polynomial in `q` with integer coefficients; ordinary
// polynomials have offset 0.
typedef struct OspPoly OspPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static NUL-terminated string.
const char *osp_version(void);

// Message for the most recent failure on this thread, or NULL. The pointer
// stays valid until the next call into this library on the same thread.
const char *osp_last_error(void);

// Creates an engine for rank `n`. `jobs` is the worker count for Kostka
// sums (1 runs on the calling thread); `max_rank` caps `n`.
//
// # Safety
// `out` must be a valid pointer to writable storage for one handle.
enum OspStatus osp_engine_new(size_t n, size_t max_rank, size_t jobs, struct OspEngine **out);

// # Safety
// `engine` must be NULL or a handle from [`osp_engine_new`] not yet freed.
void osp_engine_free(struct OspEngine *engine);

// # Safety
// `engine` must be NULL or a live handle.
size_t osp_engine_rank(const struct OspEngine *engine);

// `L_α(q)` for `α = Σ delta[i]·δᵢ + Σ eps[i]·εᵢ`; both arrays have the
// engine's rank as length.
//
// # Safety
// Pointers must be valid for `len` reads; `out` must be writable.
enum OspStatus osp_lpoly(const struct OspEngine *engine,
                         const int64_t *delta,
                         const int64_t *eps,
                         size_t len,
                         struct OspPoly **out);

// `K_{(λ₁,λ₀),(μ₁,μ₀)}(q)`. All four arrays have length `len`, equal to
// the engine's rank, and must be partitions.
//
// # Safety
// Pointers must be valid for `len` reads; `out` must be writable.
enum OspStatus osp_kostka(const struct OspEngine *engine,
                          const int64_t *lam1,
                          const int64_t *lam0,
                          const int64_t *mu1,
                          const int64_t *mu0,
                          size_t len,
                          struct OspPoly **out);

// `q^{−dim}·K(q⁻¹)`, the IC-stalk Poincaré polynomial along the orbit of
// `μ`, whose dimension `dim` the caller supplies.
//
// # Safety
// As for [`osp_kostka`].
enum OspStatus osp_stalk(const struct OspEngine *engine,
                         const int64_t *lam1,
                         const int64_t *lam0,
                         const int64_t *mu1,
                         const int64_t *mu0,
                         size_t len,
                         int64_t dim,
                         struct OspPoly **out);

// Writes whether `(λ₁,λ₀) ≥ (μ₁,μ₀)` in the closure order.
//
// # Safety
// As for [`osp_kostka`]; `out` must be writable.
enum OspStatus osp_dominance_ge(const struct OspEngine *engine,
                                const int64_t *lam1,
                                const int64_t *lam0,
                                const int64_t *mu1,
                                const int64_t *mu0,
                                size_t len,
                                bool *out);

// # Safety
// `poly` must be NULL or a handle returned by this library, not yet freed.
void osp_poly_free(struct OspPoly *poly);

// Exponent of the first stored coefficient (0 for the zero polynomial).
//
// # Safety
// `poly` must be NULL or a live handle.
int64_t osp_poly_offset(const struct OspPoly *poly);

// Number of stored coefficients; 0 for the zero polynomial.
//
// # Safety
// `poly` must be NULL or a live handle.
size_t osp_poly_len(const struct OspPoly *poly);

// Coefficient of `q^exp`. Fails with `Overflow` if it does not fit in 64
// bits; use [`osp_poly_to_json`] for those.
//
// # Safety
// `poly` must be a live handle and `out` writable.
enum OspStatus osp_poly_coeff(const struct OspPoly *poly, int64_t exp, int64_t *out);

// JSON text `{"offset":…,"coeffs":[…]}`; release with [`osp_string_free`].
//
// # Safety
// `poly` must be a live handle and `out` writable.
enum OspStatus osp_poly_to_json(const struct OspPoly *poly, char **out);

// # Safety
// `s` must be NULL or a string returned by this library, not yet freed.
void osp_string_free(char *s);

// Dimension of the Hesselink resolution for `"F4"` or `"G3"`.
//
// # Safety
// `name` must be a NUL-terminated string and `out` writable.
enum OspStatus osp_hesselink_dim(const char *name, size_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* OSP_KOSTKA_H */

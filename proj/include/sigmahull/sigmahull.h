/*
 * C interface to the sigmahull library.
 *
 * Objects are opaque handles released with the matching *_free call. Every
 * function returns an sh_status; on failure the message is available from
 * sh_last_error() on the same thread until the next call. Strings returned
 * through char** out-parameters are heap allocated and released with
 * sh_string_free().
 *
 * Structured values (codes, monomial matrices, reports, tables) cross the
 * boundary as JSON text in the same formats as the command-line files.
 */
#ifndef SIGMAHULL_H
#define SIGMAHULL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SH_API __declspec(dllexport)
#else
#define SH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sh_status {
  SH_OK = 0,
  SH_ERR_PARSE,
  SH_ERR_IO,
  SH_ERR_INVALID_ARGUMENT,
  SH_ERR_INVALID_FIELD,
  SH_ERR_INVALID_EXPONENT,
  SH_ERR_FIELD_MISMATCH,
  SH_ERR_INCOMPATIBLE,
  SH_ERR_NOT_SQUARE,
  SH_ERR_NOT_MONOMIAL,
  SH_ERR_DIVISION_BY_ZERO,
  SH_ERR_ZERO_CODE,
  SH_ERR_TOO_LARGE,
  SH_ERR_PRECONDITION_FAILED,
  SH_ERR_DEGENERATE_DEFINING_MATRIX,
  SH_ERR_FIELD_TOO_SMALL,
  SH_ERR_TARGET_OUT_OF_RANGE,
  SH_ERR_SEARCH_EXHAUSTED,
  SH_ERR_NOT_MDS,
  SH_ERR_FORMULA_MISMATCH,
  SH_ERR_INTERNAL
} sh_status;

typedef enum sh_format { SH_FORMAT_CSV = 0, SH_FORMAT_JSON = 1 } sh_format;

typedef enum sh_search_mode { SH_SEARCH_AUTO = 0, SH_SEARCH_EXHAUSTIVE = 1, SH_SEARCH_SAMPLED = 2 } sh_search_mode;

typedef struct sh_code sh_code;
typedef struct sh_sigma sh_sigma;
typedef struct sh_mpspec sh_mpspec;

SH_API const char* sh_status_name(sh_status status);
SH_API const char* sh_last_error(void);
SH_API void sh_string_free(char* s);

/* Codes: {"field": {"p","e","modulus"?}, "generator": {"rows","cols","entries"}} */
SH_API sh_status sh_code_from_json(const char* json, sh_code** out);
SH_API sh_status sh_code_load(const char* path, sh_code** out);
SH_API void sh_code_free(sh_code* code);
SH_API sh_status sh_code_to_json(const sh_code* code, char** out);
SH_API sh_status sh_code_info(const sh_code* code, uint32_t* q, size_t* n, size_t* k);
/* Exact minimum distance by enumeration; SH_ERR_ZERO_CODE or SH_ERR_TOO_LARGE otherwise. */
SH_API sh_status sh_code_min_distance(const sh_code* code, size_t* d);

/* sigma: {"s", "perm" (1-based images), "diag"}, read over the field of `code`.
 * A NULL json or path gives the Euclidean sigma of the code's length. */
SH_API sh_status sh_sigma_from_json(const char* json, const sh_code* code, sh_sigma** out);
SH_API sh_status sh_sigma_load(const char* path, const sh_code* code, sh_sigma** out);
SH_API void sh_sigma_free(sh_sigma* sigma);
SH_API sh_status sh_sigma_to_json(const sh_sigma* sigma, char** out);

/* dim Hull_sigma(C); basis_json (may be NULL) receives the basis matrix. */
SH_API sh_status sh_sigma_hull(const sh_code* code, const sh_sigma* sigma, size_t* dim, char** basis_json);
SH_API sh_status sh_sigma_dual(const sh_code* code, const sh_sigma* sigma, sh_code** out);
SH_API sh_status sh_relative_hull_dim(const sh_code* c1, const sh_code* c2, const sh_sigma* sigma, size_t* dim);

/* Matrix-product specs: {"A", "constituents", "sigma"?}; relative constituent
 * paths resolve against base_dir (may be NULL). */
SH_API sh_status sh_mpspec_from_json(const char* json, const char* base_dir, sh_mpspec** out);
SH_API sh_status sh_mpspec_load(const char* path, sh_mpspec** out);
SH_API void sh_mpspec_free(sh_mpspec* spec);
SH_API sh_status sh_mp_build(const sh_mpspec* spec, sh_code** out);
/* Hull dimension plus {"rho","alphas","terms"} detail (detail_json may be NULL). */
SH_API sh_status sh_mp_hull(const sh_mpspec* spec, size_t* dim, char** detail_json);
SH_API sh_status sh_mp_check_dual_containing(const sh_mpspec* spec, int* result);
SH_API sh_status sh_mp_check_self_orthogonal(const sh_mpspec* spec, int* result);
/* The sigma dual as an MP spec in JSON. */
SH_API sh_status sh_mp_sigma_dual(const sh_mpspec* spec, char** out);

/* Steering. With c2 == NULL the self hull of c1 is steered to `target`;
 * otherwise dim(c1 ∩ (c2 M)^{⊥σ}). result_json: {"code","witness","trials"}. */
SH_API sh_status sh_steer(const sh_code* c1, const sh_code* c2, const sh_sigma* sigma, size_t target,
                          uint64_t budget, uint64_t seed, sh_search_mode mode, char** result_json);

/* EAQECC tables. Rows are ordered by h, then provenance. */
SH_API sh_status sh_eaqecc_pair(const sh_code* c1, const sh_code* c2, sh_format format, char** out);
SH_API sh_status sh_eaqecc_hull(const sh_code* code, const sh_sigma* sigma, sh_format format, char** out);
SH_API sh_status sh_eaqecc_family(const sh_code* code, const sh_sigma* sigma, uint64_t budget, uint64_t seed,
                                  sh_format format, char** out);
SH_API sh_status sh_eaqecc_mds(const sh_code* code, const sh_sigma* sigma, uint64_t budget, uint64_t seed,
                               sh_format format, char** out);
SH_API sh_status sh_eaqecc_mp(const sh_mpspec* spec, uint64_t budget, uint64_t seed, sh_format format, char** out);

/* Verification campaign. fields may be NULL (suite defaults). `failures`
 * receives the number of counterexamples; report_json holds them. */
SH_API sh_status sh_verify(const char* suite, uint64_t seed, uint64_t trials, size_t max_n, const uint32_t* fields,
                           size_t field_count, char** report_text, char** report_json, uint64_t* failures);

#ifdef __cplusplus
}
#endif

#endif /* SIGMAHULL_H */

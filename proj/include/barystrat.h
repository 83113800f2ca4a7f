/* barystrat: exact-arithmetic decision engine for generalized spaces of
 * formal barycenters on surfaces with conical singularities.
 *
 * C API over an opaque parameter handle. All rationals cross the boundary
 * as canonical "p/q" strings (negative sign on the numerator, "p" when the
 * denominator is 1); index arrays are 1-based sorted indices. Strings
 * returned through char** out-parameters are heap-allocated and must be
 * released with bary_string_free. Functions return BARY_OK on success; on
 * failure bary_last_error() gives a message, valid on the calling thread
 * until the next barystrat call.
 */

#ifndef BARYSTRAT_H
#define BARYSTRAT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define BARYSTRAT_API __declspec(dllexport)
#elif defined(__GNUC__)
#define BARYSTRAT_API __attribute__((visibility("default")))
#else
#define BARYSTRAT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bary_status {
  BARY_OK = 0,
  BARY_ERR_INTERNAL = 1,
  BARY_ERR_SINGULAR = 2, /* rho (or the reduced rho of a threshold query) is singular */
  BARY_ERR_INVALID = 3,  /* parse, validation or precondition failure */
  BARY_ERR_LIMIT = 4     /* configured size cap exceeded */
} bary_status;

typedef struct bary_params_s bary_params;

BARYSTRAT_API const char* bary_version(void);
BARYSTRAT_API const char* bary_last_error(void);
BARYSTRAT_API void bary_string_free(char* s);

/* Parses "p/q" or a finite decimal and returns the canonical form (lowest
 * terms, positive denominator, "p" for integers). */
BARYSTRAT_API bary_status bary_rational_canonical(const char* text, char** out);

/* rho_over_4pi: rho in 4*pi units, "p/q" or finite decimal, must be > 0.
 * alphas_csv: comma-separated weights in user order, each in (-1, 0),
 * NULL or "" for the regular case m = 0. */
BARYSTRAT_API bary_status bary_params_create(const char* rho_over_4pi,
                                             const char* alphas_csv,
                                             bary_params** out);
BARYSTRAT_API void bary_params_free(bary_params* params);

BARYSTRAT_API bary_status bary_params_m(const bary_params* params, size_t* out);
BARYSTRAT_API bary_status bary_params_rho(const bary_params* params, char** out);
/* sorted_index is 1-based; index 1 is the minimal weight. */
BARYSTRAT_API bary_status bary_params_alpha(const bary_params* params,
                                            size_t sorted_index, char** out);
BARYSTRAT_API bary_status bary_params_user_index(const bary_params* params,
                                                 size_t sorted_index, size_t* out);

/* Weighted cardinality of the label (k, I) as a canonical rational. */
BARYSTRAT_API bary_status bary_chi(const bary_params* params, unsigned k,
                                   const size_t* indices, size_t n_indices,
                                   char** out);
/* 3k + card(I) - 1; the empty label is rejected. */
BARYSTRAT_API bary_status bary_dimension(unsigned k, const size_t* indices,
                                         size_t n_indices, long* out);
/* Stratum inclusion order on labels (independent of any parameters). */
BARYSTRAT_API bary_status bary_precedes(unsigned k1, const size_t* indices1, size_t n1,
                                        unsigned k2, const size_t* indices2, size_t n2,
                                        int* out);
BARYSTRAT_API bary_status bary_is_admissible(const bary_params* params, unsigned k,
                                             const size_t* indices, size_t n_indices,
                                             int* out);
BARYSTRAT_API bary_status bary_is_singular(const bary_params* params, int* out);

/* Distinct singular values <= upper, ascending, as a comma-separated list.
 * exclude: 0 for none, else the 1-based sorted index left out. */
BARYSTRAT_API bary_status bary_singular_values(const bary_params* params,
                                               const char* upper, size_t exclude,
                                               char** out_csv);

/* Same value set as a formatted document (text line or JSON). */
BARYSTRAT_API bary_status bary_singular_report(const bary_params* params,
                                               const char* upper, int as_json,
                                               char** out);

/* cap: maximum number of admissible strata (0 selects the default 2^20). */
BARYSTRAT_API bary_status bary_stratum_count(const bary_params* params, uint64_t cap,
                                             uint64_t* out);
BARYSTRAT_API bary_status bary_is_contractible(const bary_params* params, uint64_t cap,
                                               int* out);

/* Full classification report, formatted. Fails with BARY_ERR_SINGULAR when
 * rho is a singular value. as_json: 0 = text report, 1 = JSON document. */
BARYSTRAT_API bary_status bary_analyze(const bary_params* params, uint64_t cap,
                                       int as_json, char** out);

/* DOT digraph of the admissible strata under the cover relation. */
BARYSTRAT_API bary_status bary_graph_dot(const bary_params* params, uint64_t cap,
                                         char** out);

/* Phase diagram over rho/(4*pi) in (0, rho_max), one verdict per interval
 * between consecutive singular values. */
BARYSTRAT_API bary_status bary_scan(const char* alphas_csv, const char* rho_max,
                                    uint64_t cap, int as_json, char** out);

/* Contractibility threshold for the weight of index j against the fixed
 * remaining weights (other_alphas_csv, possibly empty). */
BARYSTRAT_API bary_status bary_threshold(const char* other_alphas_csv, size_t j,
                                         const char* rho_over_4pi, int as_json,
                                         char** out);

#ifdef __cplusplus
}
#endif

#endif /* BARYSTRAT_H */

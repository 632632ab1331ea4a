/* Copyright 2026 The ricbounds Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the ricbounds library.
 *
 * Every fallible call returns a ricb_status; on failure a message for the
 * calling thread is available from ricb_last_error() until that thread's next
 * call.  Handles are opaque and owned by the caller.  All functions are safe to
 * call concurrently on distinct handles.
 */

#ifndef RICB_RICB_H_
#define RICB_RICB_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RICB_API __declspec(dllexport)
#elif defined(__GNUC__)
#define RICB_API __attribute__((visibility("default")))
#else
#define RICB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ricb_status {
  RICB_OK = 0,
  RICB_ERR_DOMAIN = 1,    /* argument outside the admissible domain */
  RICB_ERR_NOT_FOUND = 2, /* reference cell absent */
  RICB_ERR_PARSE = 3,     /* unparseable name or data */
  RICB_ERR_NULL = 4,      /* required pointer argument was NULL */
  RICB_ERR_INTERNAL = 5
} ricb_status;

typedef enum ricb_bound_kind {
  RICB_UPPER_SIMPLE = 0,
  RICB_LOWER_SIMPLE = 1,
  RICB_UPPER_LIFTED = 2,
  RICB_LOWER_LIFTED = 3
} ricb_bound_kind;

typedef enum ricb_quantity { RICB_URIC = 0, RICB_LRIC = 1 } ricb_quantity;

RICB_API const char* ricb_version(void);
RICB_API const char* ricb_last_error(void);
RICB_API const char* ricb_status_name(ricb_status status);

/* ---- bound kinds ---- */

/* "upper-simple", "lower-simple", "upper-lifted", "lower-lifted". */
RICB_API const char* ricb_bound_kind_name(ricb_bound_kind kind);
RICB_API ricb_status ricb_parse_bound_kind(const char* text, ricb_bound_kind* out);

/* ---- optimizer configuration ---- */

typedef struct ricb_config ricb_config;

RICB_API ricb_status ricb_config_create(ricb_config** out);
RICB_API void ricb_config_destroy(ricb_config* config);
RICB_API ricb_status ricb_config_set_inner_tol(ricb_config* config, double tol);
RICB_API ricb_status ricb_config_set_outer_tol(ricb_config* config, double tol);
RICB_API ricb_status ricb_config_set_multistart(ricb_config* config, int per_axis);
RICB_API ricb_status ricb_config_set_c3_range(ricb_config* config, double lo, double hi);
RICB_API ricb_status ricb_config_set_max_evals(ricb_config* config, uint64_t max_evals);
RICB_API ricb_status ricb_config_get(const ricb_config* config, double* inner_tol,
                                     double* outer_tol, int* multistart, double* c3_min,
                                     double* c3_max, uint64_t* max_evals);

/* ---- bounds ---- */

typedef struct ricb_bound_result {
  double value;
  int has_params; /* nonzero for lifted kinds */
  double c3;
  double gamma;
  double nu;
  int converged;
  uint64_t evaluations;
} ricb_bound_result;

/* Validates 0 < beta < alpha <= 1.  Writes the beta for a (alpha, rho) pair. */
RICB_API ricb_status ricb_beta_from_rho(double alpha, double rho, double* beta);

/* config may be NULL for defaults.  Non-convergence is reported through
 * out->converged, not the status. */
RICB_API ricb_status ricb_bound(ricb_bound_kind kind, double alpha, double beta,
                                const ricb_config* config, ricb_bound_result* out);

/* ---- reference tables ---- */

RICB_API ricb_status ricb_reference_lookup(int table_id, double alpha, double rho,
                                           const char* quantity, double* out);
/* Like lookup, but a missing cell yields *found = 0 and RICB_OK. */
RICB_API ricb_status ricb_reference_find(int table_id, double alpha, double rho,
                                         const char* quantity, int* found, double* out);
RICB_API size_t ricb_reference_count(void);
RICB_API ricb_status ricb_reference_entry(size_t index, int* table_id, double* alpha,
                                          double* rho, const char** quantity, double* value);
/* upper != 0: xi^2 - 1; otherwise 1 - xi^2. */
RICB_API ricb_status ricb_bt_relation(double xi_bt, int upper, double* out);

/* ---- empirical oracle ---- */

typedef struct ricb_empirical ricb_empirical;

typedef struct ricb_estimate_summary {
  double mean;
  double stddev;
  size_t trials;
  int sampled; /* 0 exhaustive, 1 sampled supports */
  uint64_t supports_per_trial;
} ricb_estimate_summary;

/* threads <= 1 runs inline; results do not depend on it. */
RICB_API ricb_status ricb_empirical_run(size_t m, size_t n, size_t k, size_t trials,
                                        uint64_t support_budget, uint64_t seed,
                                        unsigned threads, ricb_empirical** out);
RICB_API void ricb_empirical_destroy(ricb_empirical* run);
RICB_API ricb_status ricb_empirical_summary(const ricb_empirical* run, ricb_quantity quantity,
                                            ricb_estimate_summary* out);
/* The pointer stays valid until the handle is destroyed. */
RICB_API ricb_status ricb_empirical_per_trial(const ricb_empirical* run,
                                              ricb_quantity quantity, const double** values,
                                              size_t* count);

/* ---- special functions ---- */

RICB_API ricb_status ricb_erf(double x, double* out);
RICB_API ricb_status ricb_erfc(double x, double* out);
RICB_API ricb_status ricb_erfcx(double x, double* out);
RICB_API ricb_status ricb_erfinv(double p, double* out);

#ifdef __cplusplus
}
#endif

#endif /* RICB_RICB_H_ */

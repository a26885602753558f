/* Copyright 2026 The cournotq Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of the cournotq shared library.
 *
 * Every entry point returns a cq_status. On failure the out-parameters are
 * left untouched and cq_last_error() returns a message for the calling
 * thread, valid until that thread's next call into the library.
 *
 * Handles (cq_market, cq_verify_report) are opaque, immutable after
 * creation, and owned by the caller; release them with the matching
 * *_free function. Passing NULL to a *_free function is a no-op.
 */

#ifndef COURNOTQ_H_
#define COURNOTQ_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(COURNOTQ_BUILDING)
#    define CQ_API __declspec(dllexport)
#  else
#    define CQ_API __declspec(dllimport)
#  endif
#else
#  define CQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cq_status {
  CQ_OK = 0,
  CQ_ERR_INVALID_PARAMS = 1,
  CQ_ERR_NEGATIVE_QUANTITY = 2,
  CQ_ERR_NON_INTERIOR = 3,
  CQ_ERR_NON_POSITIVE_MARGIN = 4,
  CQ_ERR_ASYMMETRIC_MARGINS = 5,
  CQ_ERR_NEGATIVE_STRATEGY = 6,
  CQ_ERR_OUT_OF_RANGE = 7,
  CQ_ERR_NON_POSITIVE_TOLERANCE = 8,
  CQ_ERR_MULTIPLE_ROOTS = 9,
  CQ_ERR_EMPTY_INTERVAL = 10,
  CQ_ERR_NO_CONVERGENCE = 11,
  CQ_ERR_STEP_OUT_OF_DOMAIN = 12,
  CQ_ERR_NULL_ARGUMENT = 100,
  CQ_ERR_INTERNAL = 101
} cq_status;

typedef enum cq_depth { CQ_DEPTH_QUICK = 0, CQ_DEPTH_FULL = 1 } cq_depth;

typedef struct cq_market cq_market;
typedef struct cq_verify_report cq_verify_report;

typedef struct cq_constants {
  double k1;
  double k2;
  double delta;
  double s;      /* computed with k = k1 */
  int k1_ne_k2;  /* nonzero when the margins differ */
} cq_constants;

/* Firm 1 strategy and the two type-contingent strategies of firm 2. In the
 * classical game these are quantities. */
typedef struct cq_triple {
  double x1;
  double x2h;
  double x2l;
} cq_triple;

/* Equilibrium with measured quantities and profits per cost realization.
 * u1_avg and u2_avg are the theta-weighted averages. */
typedef struct cq_equilibrium {
  double gamma;
  cq_triple strategies;
  double q1_high, q2_high; /* quantities when firm 2 has cost cH */
  double q1_low, q2_low;
  double u1_high, u1_low;
  double u2_high, u2_low;
  double u1_avg, u2_avg;
} cq_equilibrium;

typedef struct cq_grid_spec {
  double lo;
  double hi;
  int coarse_points;
  int refine_rounds;
} cq_grid_spec;

typedef struct cq_fixed_point_config {
  double tol;
  int max_iters;
  double damping;
} cq_fixed_point_config;

/* ---- errors ------------------------------------------------------------ */

CQ_API const char* cq_status_name(cq_status status);
CQ_API const char* cq_last_error(void);

/* ---- market ------------------------------------------------------------ */

/* Validates and stores the market. CQ_ERR_INVALID_PARAMS names the first
 * violated constraint. */
CQ_API cq_status cq_market_create(double a, double c1, double ch, double cl,
                                  double theta, cq_market** out);
CQ_API void cq_market_free(cq_market* market);
CQ_API cq_status cq_market_constants(const cq_market* market,
                                     cq_constants* out);

CQ_API cq_status cq_price(double total_quantity, double a, double* out);
CQ_API cq_status cq_profit(double q_self, double q_other, double c_self,
                           double a, double* out);

/* ---- classical --------------------------------------------------------- */

/* Bayes-Nash equilibrium and profits; gamma is reported as 0. */
CQ_API cq_status cq_classical_equilibrium(const cq_market* market,
                                          cq_equilibrium* out);
CQ_API cq_status cq_symmetric_nash(double k, double* quantity,
                                   double* payoff);
CQ_API cq_status cq_pareto_optimum(double k, double* quantity,
                                   double* payoff);

/* ---- quantum ----------------------------------------------------------- */

CQ_API cq_status cq_gamma_from_tanh(double t, double* gamma);
CQ_API cq_status cq_strategies_to_quantities(double x1, double x2,
                                             double gamma, double* q1,
                                             double* q2);
/* Closed-form equilibrium; requires k1 = k2. */
CQ_API cq_status cq_quantum_equilibrium(const cq_market* market, double gamma,
                                        cq_equilibrium* out);
CQ_API cq_status cq_average_profits(double gamma, double s, double k,
                                    double* u1_bar, double* u2_bar);
CQ_API cq_status cq_profit_gamma_derivative(double gamma, double s, double k,
                                            double* out);
CQ_API void cq_thresholds(double* s_m, double* s_c);
/* *found is set to 0 when no root exists; *gamma is then untouched. */
CQ_API cq_status cq_find_gamma_m(double s, double k, double tol, int* found,
                                 double* gamma);
CQ_API cq_status cq_find_gamma_c(double s, double k, double tol, int* found,
                                 double* gamma);
CQ_API cq_status cq_asymptotic_profits(double s, double k, double* u1_bar,
                                       double* u2_bar);

/* ---- oracle ------------------------------------------------------------ */

/* Fills the defaults: [0, a], 2001 points, 3 refinements / tol 1e-8,
 * 10000 sweeps, damping 1. */
CQ_API cq_status cq_default_grid(const cq_market* market, cq_grid_spec* out);
CQ_API void cq_default_fixed_point(cq_fixed_point_config* out);

/* Iterated best responses. On CQ_ERR_NO_CONVERGENCE, *out still receives
 * the last profile. */
CQ_API cq_status cq_oracle_equilibrium(const cq_market* market, double gamma,
                                       const cq_grid_spec* grid,
                                       const cq_fixed_point_config* cfg,
                                       cq_triple* out, double* resolution);
CQ_API cq_status cq_finite_diff_gamma(double s, double k, double gamma,
                                      double h, double* out);
/* Gaussian noise with variance exp(-2 r) / 2 from a seeded mt19937_64. */
CQ_API cq_status cq_sample_quantity(double x_target, double r, uint64_t seed,
                                    size_t n, double* mean, double* variance);

/* ---- verification ------------------------------------------------------ */

/* tol_override <= 0 or NaN keeps each check's own tolerance. */
CQ_API cq_status cq_verify_run(uint64_t seed, cq_depth depth,
                               double tol_override, cq_verify_report** out);
CQ_API void cq_verify_report_free(cq_verify_report* report);
CQ_API size_t cq_verify_report_size(const cq_verify_report* report);
/* Returns -1 for an out-of-range index, else 1 (passed) or 0 (failed). */
CQ_API int cq_verify_report_passed(const cq_verify_report* report,
                                   size_t index);
/* Strings live as long as the report; NULL for an out-of-range index. */
CQ_API const char* cq_verify_report_name(const cq_verify_report* report,
                                         size_t index);
CQ_API const char* cq_verify_report_detail(const cq_verify_report* report,
                                           size_t index);
CQ_API double cq_verify_report_max_error(const cq_verify_report* report,
                                         size_t index);
CQ_API double cq_verify_report_tolerance(const cq_verify_report* report,
                                         size_t index);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* COURNOTQ_H_ */

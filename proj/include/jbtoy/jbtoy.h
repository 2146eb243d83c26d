// Copyright 2026 The jbtoy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * C interface to the jbtoy library: the exactly solvable N-level
 * PT-symmetric toy model falling into a Jordan-block degeneracy at tau = 1.
 *
 * Conventions
 *  - Every function returns a jbt_status; JBT_OK is zero. On failure a
 *    message is available from jbt_last_error() on the calling thread.
 *  - Matrices are row-major arrays of doubles; `capacity` counts elements.
 *    A buffer that is too small yields JBT_ERR_BUFFER and is left untouched.
 *  - Complex vectors are interleaved (re0, im0, re1, im1, ...).
 *  - Opaque handles are immutable once created and may be shared across
 *    threads; release them with the matching *_free function.
 */
#ifndef JBTOY_JBTOY_H
#define JBTOY_JBTOY_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(JBTOY_BUILDING)
#    define JBT_API __declspec(dllexport)
#  else
#    define JBT_API __declspec(dllimport)
#  endif
#else
#  define JBT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum jbt_status {
  JBT_OK = 0,
  JBT_ERR_ARGUMENT = 1,
  JBT_ERR_DOMAIN = 2,
  JBT_ERR_CONTRACT = 3,
  JBT_ERR_SINGULAR = 4,
  JBT_ERR_DEGENERATE = 5,
  JBT_ERR_POSITIVITY = 6,
  JBT_ERR_CONVERGENCE = 7,
  JBT_ERR_NOT_TABULATED = 8,
  JBT_ERR_INSTABILITY = 9,
  JBT_ERR_BUFFER = 10,
  JBT_ERR_INTERNAL = 11
} jbt_status;

JBT_API const char* jbt_version(void);
JBT_API const char* jbt_status_string(jbt_status status);
JBT_API const char* jbt_last_error(void);

/* ---- model ------------------------------------------------------------- */

/* H(tau) = D + tau A, n x n. */
JBT_API jbt_status jbt_hamiltonian(int n, double tau, double* out, size_t capacity);
/* Ascending closed-form energies; 0 <= tau <= 1. */
JBT_API jbt_status jbt_energies(int n, double tau, double* out, size_t capacity);
JBT_API jbt_status jbt_pseudo_hermiticity_residual(int n, double tau, double* out);
JBT_API jbt_status jbt_defectiveness_gauge(int n, double tau, double* out);
/* Unit right / conjugate eigenvectors as matrix columns (n x n each) and the
 * diagonal pairing <<psi_k|psi_k> (n entries). Any output may be NULL. */
JBT_API jbt_status jbt_biorthogonal_system(int n, double tau, double* rights,
                                           double* ketkets, double* pairing,
                                           size_t capacity);

/* ---- metric ------------------------------------------------------------ */

typedef struct jbt_metric_poly jbt_metric_poly;

JBT_API jbt_status jbt_metric_poly_solve(int n, jbt_metric_poly** out);
JBT_API void jbt_metric_poly_free(jbt_metric_poly* poly);
JBT_API int jbt_metric_poly_dim(const jbt_metric_poly* poly);
/* Dimension of the solution space left after fixing M(1) = I; 0 = unique. */
JBT_API int jbt_metric_poly_nullity(const jbt_metric_poly* poly);
JBT_API double jbt_metric_poly_residual(const jbt_metric_poly* poly);
/* M(k), 1 <= k <= n. */
JBT_API jbt_status jbt_metric_poly_coefficient(const jbt_metric_poly* poly, int k,
                                               double* out, size_t capacity);
/* Theta(tau) and, if `eigenvalues` is non-NULL, its ascending spectrum. */
JBT_API jbt_status jbt_metric_poly_assemble(const jbt_metric_poly* poly, double tau,
                                            double* theta, double* eigenvalues,
                                            size_t capacity);

JBT_API jbt_status jbt_metric_n2_alpha(double tau, double alpha, double* theta,
                                       double* eigenvalues);
JBT_API jbt_status jbt_metric_n2_hyperbolic(double nu, double rho, double* theta,
                                            double* eigenvalues, double* induced_tau);
JBT_API jbt_status jbt_metric_n3_gfamily(double tau, double g, double* theta,
                                         double* eigenvalues);
/* *found = 0 when the g-family stays positive on (0, 1]. */
JBT_API jbt_status jbt_positivity_boundary_n3(double g, double* tau_star, int* found);
JBT_API jbt_status jbt_spectral_metric(int n, double tau, const double* kappa,
                                       double* theta, double* eigenvalues,
                                       size_t capacity);
/* On JBT_ERR_CONVERGENCE `kappa` receives the best iterate. */
JBT_API jbt_status jbt_minimize_anisotropy(int n, double tau, double* kappa,
                                           double* eigenvalues, size_t capacity);
JBT_API jbt_status jbt_anisotropy(int n, const double* theta, double* out);
/* alpha(k) as a rows x cols array (rows = k, cols = n - k + 1). */
JBT_API jbt_status jbt_coefficient_array(int n, int k, double* out, size_t capacity,
                                         int* rows, int* cols);
JBT_API jbt_status jbt_pascal_table(int n, int64_t* out, size_t capacity);
JBT_API jbt_status jbt_metric_eigenvalues_closed(int n, double tau, double* out,
                                                 size_t capacity);

/* ---- Dyson map, Coriolis term, generator -------------------------------- */

typedef struct jbt_dyson jbt_dyson;

JBT_API jbt_status jbt_dyson_create(int n, jbt_dyson** out);
JBT_API void jbt_dyson_free(jbt_dyson* dyson);
JBT_API int jbt_dyson_dim(const jbt_dyson* dyson);
JBT_API jbt_status jbt_dyson_metric(const jbt_dyson* dyson, double tau, double* out,
                                    size_t capacity);
JBT_API jbt_status jbt_dyson_omega(const jbt_dyson* dyson, double tau, double* out,
                                   size_t capacity);
/* Sigma = i * S; these write the real matrix S. */
JBT_API jbt_status jbt_dyson_coriolis(const jbt_dyson* dyson, double tau, double* out,
                                      size_t capacity);
JBT_API jbt_status jbt_dyson_coriolis_numeric(const jbt_dyson* dyson, double tau,
                                              double h, double* out, size_t capacity);
JBT_API jbt_status jbt_dyson_generator(const jbt_dyson* dyson, double tau,
                                       int with_coriolis, double* re, double* im,
                                       size_t capacity);
JBT_API jbt_status jbt_dyson_hamiltonian(const jbt_dyson* dyson, double tau,
                                         double* out, size_t capacity);

/* ---- evolution ---------------------------------------------------------- */

typedef enum jbt_frame {
  JBT_FRAME_S_FULL = 0,
  JBT_FRAME_S_ADIABATIC = 1,
  JBT_FRAME_P = 2
} jbt_frame;

typedef struct jbt_evolution_config {
  int n;
  double tau0;
  double tau1;
  double step;
  jbt_frame frame;
} jbt_evolution_config;

typedef struct jbt_trajectory jbt_trajectory;

JBT_API jbt_status jbt_default_initial_state(int n, double tau0, double* psi,
                                             size_t capacity);
JBT_API jbt_status jbt_evolve(const jbt_evolution_config* config, const double* psi0,
                              jbt_trajectory** out);
JBT_API jbt_status jbt_frame_transport(const jbt_trajectory* s_trajectory,
                                       jbt_trajectory** out);
JBT_API void jbt_trajectory_free(jbt_trajectory* trajectory);
JBT_API size_t jbt_trajectory_length(const jbt_trajectory* trajectory);
JBT_API int jbt_trajectory_dim(const jbt_trajectory* trajectory);
JBT_API double jbt_trajectory_max_drift(const jbt_trajectory* trajectory);
/* Any of tau, psi (2n doubles), phys_norm may be NULL. */
JBT_API jbt_status jbt_trajectory_point(const jbt_trajectory* trajectory, size_t index,
                                        double* tau, double* psi, double* phys_norm);

typedef struct jbt_horizon_row {
  double tau;
  double anisotropy;
  double coriolis_norm;
  double defectiveness;
  double min_theta;
} jbt_horizon_row;

/* steps + 1 rows. */
JBT_API jbt_status jbt_horizon_report(int n, double tau_max, int steps,
                                      jbt_horizon_row* out, size_t capacity);

/* ---- verification ------------------------------------------------------- */

#define JBT_VERIFY_CORRUPT_COEFFICIENTS 1u

typedef struct jbt_verify_report jbt_verify_report;

JBT_API jbt_status jbt_verify(int n_max, unsigned flags, jbt_verify_report** out);
JBT_API void jbt_verify_free(jbt_verify_report* report);
JBT_API size_t jbt_verify_count(const jbt_verify_report* report);
JBT_API const char* jbt_verify_name(const jbt_verify_report* report, size_t index);
JBT_API int jbt_verify_passed(const jbt_verify_report* report, size_t index);
JBT_API const char* jbt_verify_detail(const jbt_verify_report* report, size_t index);

#ifdef __cplusplus
}
#endif

#endif /* JBTOY_JBTOY_H */

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


#include "jbtoy/jbtoy.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <new>
#include <string>
#include <utility>

#include "errors.hpp"
#include "evolution.hpp"
#include "maps.hpp"
#include "metric.hpp"
#include "model.hpp"
#include "verify.hpp"

struct jbt_metric_poly {
  jbtoy::MetricPolynomial poly;
};

struct jbt_dyson {
  jbtoy::DysonFactorization f;
};

struct jbt_trajectory {
  jbtoy::EvolutionTrajectory t;
};

struct jbt_verify_report {
  std::vector<jbtoy::CheckResult> results;
};

namespace {

thread_local std::string g_last_error;

jbt_status status_of(jbtoy::ErrorKind kind) {
  using jbtoy::ErrorKind;
  switch (kind) {
    case ErrorKind::Argument: return JBT_ERR_ARGUMENT;
    case ErrorKind::Domain: return JBT_ERR_DOMAIN;
    case ErrorKind::Contract: return JBT_ERR_CONTRACT;
    case ErrorKind::Singular: return JBT_ERR_SINGULAR;
    case ErrorKind::Degenerate: return JBT_ERR_DEGENERATE;
    case ErrorKind::Positivity: return JBT_ERR_POSITIVITY;
    case ErrorKind::Convergence: return JBT_ERR_CONVERGENCE;
    case ErrorKind::NotTabulated: return JBT_ERR_NOT_TABULATED;
    case ErrorKind::Instability: return JBT_ERR_INSTABILITY;
  }
  return JBT_ERR_INTERNAL;
}

jbt_status set_error(jbt_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

// Runs `body`, translating exceptions into status codes. Nothing escapes.
template <class F>
jbt_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const jbtoy::Error& e) {
    return set_error(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(JBT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(JBT_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(JBT_ERR_INTERNAL, "unknown exception");
  }
}

jbt_status null_arg(const char* what) {
  return set_error(JBT_ERR_ARGUMENT, std::string(what) + " must not be NULL");
}

jbt_status check_capacity(size_t need, size_t capacity) {
  if (need > capacity) {
    return set_error(JBT_ERR_BUFFER, "buffer holds " + std::to_string(capacity) +
                                         " elements, " + std::to_string(need) +
                                         " required");
  }
  return JBT_OK;
}

void write_matrix(const jbtoy::RealMatrix& m, double* out) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[i * m.cols() + j] = m(i, j);
}

void write_vector(const jbtoy::RealVector& v, double* out) {
  std::copy(v.data(), v.data() + v.size(), out);
}

void write_complex(const jbtoy::ComplexVector& v, double* out) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out[2 * i] = v[i].real();
    out[2 * i + 1] = v[i].imag();
  }
}

jbtoy::RealMatrix read_matrix(int n, const double* in) {
  jbtoy::RealMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = in[i * n + j];
  return m;
}

// Output for a matrix-valued call: checks NULL and capacity, then writes.
jbt_status emit_matrix(const jbtoy::RealMatrix& m, double* out, size_t capacity) {
  if (!out) return null_arg("out");
  const size_t need = static_cast<size_t>(m.size());
  if (jbt_status s = check_capacity(need, capacity)) return s;
  write_matrix(m, out);
  return JBT_OK;
}

jbt_status emit_vector(const jbtoy::RealVector& v, double* out, size_t capacity) {
  if (!out) return null_arg("out");
  if (jbt_status s = check_capacity(static_cast<size_t>(v.size()), capacity)) return s;
  write_vector(v, out);
  return JBT_OK;
}

// theta (n x n) plus optional eigenvalues, both bounded by `capacity`.
jbt_status emit_sample(const jbtoy::MetricSample& s, double* theta, double* eig,
                       size_t capacity) {
  if (!theta && !eig) return null_arg("theta and eigenvalues");
  const size_t n = static_cast<size_t>(s.n);
  if (jbt_status st = check_capacity(theta ? n * n : n, capacity)) return st;
  if (theta) write_matrix(s.theta, theta);
  if (eig) write_vector(s.eigenvalues, eig);
  return JBT_OK;
}

}  // namespace

extern "C" {

const char* jbt_version(void) { return JBTOY_VERSION; }

const char* jbt_status_string(jbt_status status) {
  switch (status) {
    case JBT_OK: return "ok";
    case JBT_ERR_ARGUMENT: return "argument";
    case JBT_ERR_DOMAIN: return "domain";
    case JBT_ERR_CONTRACT: return "contract";
    case JBT_ERR_SINGULAR: return "singular";
    case JBT_ERR_DEGENERATE: return "degenerate";
    case JBT_ERR_POSITIVITY: return "positivity";
    case JBT_ERR_CONVERGENCE: return "convergence";
    case JBT_ERR_NOT_TABULATED: return "not-tabulated";
    case JBT_ERR_INSTABILITY: return "instability";
    case JBT_ERR_BUFFER: return "buffer";
    case JBT_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* jbt_last_error(void) { return g_last_error.c_str(); }

// ---- model

jbt_status jbt_hamiltonian(int n, double tau, double* out, size_t capacity) {
  return guarded([&] { return emit_matrix(jbtoy::build_hamiltonian(n, tau), out, capacity); });
}

jbt_status jbt_energies(int n, double tau, double* out, size_t capacity) {
  return guarded([&] { return emit_vector(jbtoy::energies(n, tau).levels, out, capacity); });
}

jbt_status jbt_pseudo_hermiticity_residual(int n, double tau, double* out) {
  return guarded([&] {
    if (!out) return null_arg("out");
    *out = jbtoy::pseudo_hermiticity_residual(n, tau);
    return JBT_OK;
  });
}

jbt_status jbt_defectiveness_gauge(int n, double tau, double* out) {
  return guarded([&] {
    if (!out) return null_arg("out");
    *out = jbtoy::defectiveness_gauge(n, tau);
    return JBT_OK;
  });
}

jbt_status jbt_biorthogonal_system(int n, double tau, double* rights, double* ketkets,
                                   double* pairing, size_t capacity) {
  return guarded([&] {
    const auto sys = jbtoy::biorthogonal_system(n, tau);
    const size_t nn = static_cast<size_t>(n);
    const size_t need = (rights || ketkets) ? nn * nn : nn;
    if (jbt_status s = check_capacity(need, capacity)) return s;
    if (rights) write_matrix(sys.rights, rights);
    if (ketkets) write_matrix(sys.ketkets, ketkets);
    if (pairing) write_vector(sys.pairing, pairing);
    return JBT_OK;
  });
}

// ---- metric

jbt_status jbt_metric_poly_solve(int n, jbt_metric_poly** out) {
  return guarded([&] {
    if (!out) return null_arg("out");
    *out = new jbt_metric_poly{jbtoy::solve_metric_polynomial(n)};
    return JBT_OK;
  });
}

void jbt_metric_poly_free(jbt_metric_poly* poly) { delete poly; }

int jbt_metric_poly_dim(const jbt_metric_poly* poly) { return poly ? poly->poly.n : 0; }

int jbt_metric_poly_nullity(const jbt_metric_poly* poly) {
  return poly ? poly->poly.nullity : -1;
}

double jbt_metric_poly_residual(const jbt_metric_poly* poly) {
  return poly ? poly->poly.residual : std::nan("");
}

jbt_status jbt_metric_poly_coefficient(const jbt_metric_poly* poly, int k, double* out,
                                       size_t capacity) {
  return guarded([&] {
    if (!poly) return null_arg("poly");
    if (k < 1 || k > poly->poly.n)
      return set_error(JBT_ERR_ARGUMENT, "k must lie in [1, n]");
    return emit_matrix(poly->poly.coefficient(k), out, capacity);
  });
}

jbt_status jbt_metric_poly_assemble(const jbt_metric_poly* poly, double tau, double* theta,
                                    double* eigenvalues, size_t capacity) {
  return guarded([&] {
    if (!poly) return null_arg("poly");
    return emit_sample(jbtoy::assemble_metric(poly->poly, tau), theta, eigenvalues, capacity);
  });
}

jbt_status jbt_metric_n2_alpha(double tau, double alpha, double* theta, double* eigenvalues) {
  return guarded([&] {
    return emit_sample(jbtoy::metric_n2_alpha(tau, alpha), theta, eigenvalues, 4);
  });
}

jbt_status jbt_metric_n2_hyperbolic(double nu, double rho, double* theta, double* eigenvalues,
                                    double* induced_tau) {
  return guarded([&] {
    const auto h = jbtoy::metric_n2_hyperbolic(nu, rho);
    if (induced_tau) *induced_tau = h.induced_tau;
    return emit_sample(h.sample, theta, eigenvalues, 4);
  });
}

jbt_status jbt_metric_n3_gfamily(double tau, double g, double* theta, double* eigenvalues) {
  return guarded([&] {
    return emit_sample(jbtoy::metric_n3_gfamily(tau, g), theta, eigenvalues, 9);
  });
}

jbt_status jbt_positivity_boundary_n3(double g, double* tau_star, int* found) {
  return guarded([&] {
    if (!tau_star || !found) return null_arg("tau_star and found");
    const auto b = jbtoy::positivity_boundary_n3(g);
    *found = b.has_value() ? 1 : 0;
    *tau_star = b.value_or(std::nan(""));
    return JBT_OK;
  });
}

jbt_status jbt_spectral_metric(int n, double tau, const double* kappa, double* theta,
                               double* eigenvalues, size_t capacity) {
  return guarded([&] {
    if (!kappa) return null_arg("kappa");
    if (n < 2) return set_error(JBT_ERR_ARGUMENT, "n must be >= 2");
    const jbtoy::RealVector k = Eigen::Map<const jbtoy::RealVector>(kappa, n);
    return emit_sample(jbtoy::spectral_metric(n, tau, k), theta, eigenvalues, capacity);
  });
}

jbt_status jbt_minimize_anisotropy(int n, double tau, double* kappa, double* eigenvalues,
                                   size_t capacity) {
  return guarded([&] {
    if (!kappa) return null_arg("kappa");
    if (n >= 2) {
      if (jbt_status s = check_capacity(static_cast<size_t>(n), capacity)) return s;
    }
    try {
      const auto opt = jbtoy::minimize_anisotropy(n, tau);
      write_vector(opt.kappa, kappa);
      if (eigenvalues) write_vector(opt.sample.eigenvalues, eigenvalues);
      return JBT_OK;
    } catch (const jbtoy::ConvergenceError& e) {
      const auto& best = e.best_iterate();
      std::copy(best.begin(), best.begin() + std::min<size_t>(best.size(), capacity), kappa);
      throw;
    }
  });
}

jbt_status jbt_anisotropy(int n, const double* theta, double* out) {
  return guarded([&] {
    if (!theta || !out) return null_arg("theta and out");
    if (n < 1) return set_error(JBT_ERR_ARGUMENT, "n must be >= 1");
    const auto s = jbtoy::make_sample(n, 0.0, read_matrix(n, theta));
    *out = jbtoy::anisotropy(s);
    return JBT_OK;
  });
}

jbt_status jbt_coefficient_array(int n, int k, double* out, size_t capacity, int* rows,
                                 int* cols) {
  return guarded([&] {
    const auto a = jbtoy::coefficient_array(n, k);
    if (rows) *rows = static_cast<int>(a.values.rows());
    if (cols) *cols = static_cast<int>(a.values.cols());
    if (!out) return null_arg("out");
    if (jbt_status s = check_capacity(static_cast<size_t>(a.values.size()), capacity)) return s;
    write_matrix(a.values, out);
    return JBT_OK;
  });
}

jbt_status jbt_pascal_table(int n, int64_t* out, size_t capacity) {
  return guarded([&] {
    if (!out) return null_arg("out");
    const auto t = jbtoy::pascal_table(n);
    if (jbt_status s = check_capacity(t.c.size(), capacity)) return s;
    std::copy(t.c.begin(), t.c.end(), out);
    return JBT_OK;
  });
}

jbt_status jbt_metric_eigenvalues_closed(int n, double tau, double* out, size_t capacity) {
  return guarded(
      [&] { return emit_vector(jbtoy::metric_eigenvalues_closed(n, tau), out, capacity); });
}

// ---- maps

jbt_status jbt_dyson_create(int n, jbt_dyson** out) {
  return guarded([&] {
    if (!out) return null_arg("out");
    *out = new jbt_dyson{jbtoy::DysonFactorization(n)};
    return JBT_OK;
  });
}

void jbt_dyson_free(jbt_dyson* dyson) { delete dyson; }

int jbt_dyson_dim(const jbt_dyson* dyson) { return dyson ? dyson->f.n() : 0; }

jbt_status jbt_dyson_metric(const jbt_dyson* dyson, double tau, double* out, size_t capacity) {
  return guarded([&] {
    if (!dyson) return null_arg("dyson");
    return emit_matrix(dyson->f.metric(tau), out, capacity);
  });
}

jbt_status jbt_dyson_omega(const jbt_dyson* dyson, double tau, double* out, size_t capacity) {
  return guarded([&] {
    if (!dyson) return null_arg("dyson");
    return emit_matrix(dyson->f.omega(tau), out, capacity);
  });
}

jbt_status jbt_dyson_coriolis(const jbt_dyson* dyson, double tau, double* out,
                              size_t capacity) {
  return guarded([&] {
    if (!dyson) return null_arg("dyson");
    return emit_matrix(jbtoy::coriolis_spectral(dyson->f, tau).imag, out, capacity);
  });
}

jbt_status jbt_dyson_coriolis_numeric(const jbt_dyson* dyson, double tau, double h,
                                      double* out, size_t capacity) {
  return guarded([&] {
    if (!dyson) return null_arg("dyson");
    return emit_matrix(jbtoy::coriolis_numeric(dyson->f, tau, h).imag, out, capacity);
  });
}

jbt_status jbt_dyson_generator(const jbt_dyson* dyson, double tau, int with_coriolis,
                               double* re, double* im, size_t capacity) {
  return guarded([&] {
    if (!dyson) return null_arg("dyson");
    if (!re || !im) return null_arg("re and im");
    const auto g = jbtoy::generator(dyson->f, tau, with_coriolis != 0);
    if (jbt_status s = check_capacity(static_cast<size_t>(g.g.size()), capacity)) return s;
    write_matrix(g.g.real(), re);
    write_matrix(g.g.imag(), im);
    return JBT_OK;
  });
}

jbt_status jbt_dyson_hamiltonian(const jbt_dyson* dyson, double tau, double* out,
                                 size_t capacity) {
  return guarded([&] {
    if (!dyson) return null_arg("dyson");
    return emit_matrix(jbtoy::dyson_hamiltonian(dyson->f, tau), out, capacity);
  });
}

// ---- evolution

jbt_status jbt_default_initial_state(int n, double tau0, double* psi, size_t capacity) {
  return guarded([&] {
    if (!psi) return null_arg("psi");
    const auto v = jbtoy::default_initial_state(n, tau0);
    if (jbt_status s = check_capacity(2 * static_cast<size_t>(v.size()), capacity)) return s;
    write_complex(v, psi);
    return JBT_OK;
  });
}

jbt_status jbt_evolve(const jbt_evolution_config* config, const double* psi0,
                      jbt_trajectory** out) {
  return guarded([&] {
    if (!config || !out) return null_arg("config and out");
    jbtoy::EvolutionConfig c;
    c.n = config->n;
    c.tau0 = config->tau0;
    c.tau1 = config->tau1;
    c.step = config->step;
    switch (config->frame) {
      case JBT_FRAME_S_FULL: c.frame = jbtoy::Frame::SFull; break;
      case JBT_FRAME_S_ADIABATIC: c.frame = jbtoy::Frame::SAdiabatic; break;
      case JBT_FRAME_P: c.frame = jbtoy::Frame::PFrame; break;
      default: return set_error(JBT_ERR_ARGUMENT, "unknown frame");
    }
    jbtoy::validate(c);
    jbtoy::ComplexVector v;
    if (psi0) {
      v.resize(c.n);
      for (int i = 0; i < c.n; ++i) v[i] = {psi0[2 * i], psi0[2 * i + 1]};
    } else {
      v = jbtoy::default_initial_state(c.n, c.tau0);
    }
    *out = new jbt_trajectory{jbtoy::evolve(c, v)};
    return JBT_OK;
  });
}

jbt_status jbt_frame_transport(const jbt_trajectory* s_trajectory, jbt_trajectory** out) {
  return guarded([&] {
    if (!s_trajectory || !out) return null_arg("trajectory and out");
    *out = new jbt_trajectory{jbtoy::frame_transport(s_trajectory->t)};
    return JBT_OK;
  });
}

void jbt_trajectory_free(jbt_trajectory* trajectory) { delete trajectory; }

size_t jbt_trajectory_length(const jbt_trajectory* trajectory) {
  return trajectory ? trajectory->t.taus.size() : 0;
}

int jbt_trajectory_dim(const jbt_trajectory* trajectory) {
  return trajectory ? trajectory->t.n : 0;
}

double jbt_trajectory_max_drift(const jbt_trajectory* trajectory) {
  return trajectory ? trajectory->t.max_relative_drift() : std::nan("");
}

jbt_status jbt_trajectory_point(const jbt_trajectory* trajectory, size_t index, double* tau,
                                double* psi, double* phys_norm) {
  return guarded([&] {
    if (!trajectory) return null_arg("trajectory");
    const auto& t = trajectory->t;
    if (index >= t.taus.size()) return set_error(JBT_ERR_ARGUMENT, "index out of range");
    if (tau) *tau = t.taus[index];
    if (psi) write_complex(t.states[index], psi);
    if (phys_norm) *phys_norm = t.phys_norm[index];
    return JBT_OK;
  });
}

jbt_status jbt_horizon_report(int n, double tau_max, int steps, jbt_horizon_row* out,
                              size_t capacity) {
  return guarded([&] {
    if (!out) return null_arg("out");
    const auto rows = jbtoy::horizon_approach_report(n, tau_max, steps);
    if (jbt_status s = check_capacity(rows.size(), capacity)) return s;
    for (size_t i = 0; i < rows.size(); ++i) {
      out[i] = {rows[i].tau, rows[i].anisotropy, rows[i].coriolis_norm, rows[i].defectiveness,
                rows[i].min_theta};
    }
    return JBT_OK;
  });
}

// ---- verification

jbt_status jbt_verify(int n_max, unsigned flags, jbt_verify_report** out) {
  return guarded([&] {
    if (!out) return null_arg("out");
    jbtoy::VerifyOptions opt;
    opt.n_max = n_max;
    opt.corrupt_coefficients = (flags & JBT_VERIFY_CORRUPT_COEFFICIENTS) != 0;
    *out = new jbt_verify_report{jbtoy::run_verification(opt)};
    return JBT_OK;
  });
}

void jbt_verify_free(jbt_verify_report* report) { delete report; }

size_t jbt_verify_count(const jbt_verify_report* report) {
  return report ? report->results.size() : 0;
}

const char* jbt_verify_name(const jbt_verify_report* report, size_t index) {
  if (!report || index >= report->results.size()) return nullptr;
  return report->results[index].name.c_str();
}

int jbt_verify_passed(const jbt_verify_report* report, size_t index) {
  if (!report || index >= report->results.size()) return 0;
  return report->results[index].passed ? 1 : 0;
}

const char* jbt_verify_detail(const jbt_verify_report* report, size_t index) {
  if (!report || index >= report->results.size()) return nullptr;
  return report->results[index].detail.c_str();
}

}  // extern "C"

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

#pragma once

// Hilbert-space metrics for the toy Hamiltonian: the small-N parametric
// families, the unique polynomial metric Theta(tau) = sum_j (-tau)^(j-1) M(j)
// with M(1) = I, its coefficient arrays, and the Pascal-type closed form of
// its spectrum.

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "densecore.hpp"

namespace jbtoy {

struct MetricSample {
  int n = 0;
  double tau = 0.0;
  RealMatrix theta;
  RealVector eigenvalues;  // ascending

  bool positive_definite() const {
    return eigenvalues.size() > 0 && eigenvalues[0] > 0.0;
  }
};

MetricSample make_sample(int n, double tau, RealMatrix theta);

// |H^T Theta - Theta H|_inf / |Theta|_inf with H = H^(N)(tau), N = theta size.
double compatibility_residual(const RealMatrix& theta, double tau);

// --- Coefficient layout -----------------------------------------------------
//
// The non-zero entries of M(k) form a k x (N-k+1) array alpha(k). Entry
// alpha_jm(k) (1-based j, m) lives at 0-based matrix position
//   (m + j - 2, m + k - j - 1),
// i.e. on the diagonal with offset k - 2j + 1, inside k+1 <= i+j <= 2N-k+1.

std::pair<int, int> coefficient_position(int n, int k, int j, int m);

struct CoefficientArray {
  int n = 0;
  int k = 0;
  RealMatrix values;  // k rows, N-k+1 columns
};

bool is_tabulated(int n, int k);

// Closed formulas for k in {1, 2, N-1, N} and literal arrays for
// (N, k) in {(5,3), (6,3), (7,3), (7,4)}. Anything else is a NotTabulated
// error; use solve_metric_polynomial instead.
CoefficientArray coefficient_array(int n, int k);

CoefficientArray read_coefficients(const RealMatrix& mk, int k);
RealMatrix expand_coefficients(const CoefficientArray& alpha);

// --- Polynomial metric -------------------------------------------------------

struct MetricPolynomial {
  int n = 0;
  std::vector<RealMatrix> coeffs;  // M(1) .. M(N)

  // Diagnostics of the linear solve.
  int unknowns = 0;
  int nullity = 0;
  double residual = 0.0;

  const RealMatrix& coefficient(int k) const { return coeffs.at(k - 1); }
  RealMatrix assemble(double tau) const;
};

// Solves the tau-power-matched form of H^T Theta = Theta H,
//   [D, M(k)] = -(A M(k-1) + M(k-1) A),  k = 2..N,
//   A M(N) + M(N) A = 0,
// for all entries allowed by the coefficient layout, with M(1) = I.
// The stacked system is dense with N^3 rows, so the solver is limited to
// desk-scale dimensions.
inline constexpr int kMaxSolverDimension = 16;

MetricPolynomial solve_metric_polynomial(int n);

MetricSample assemble_metric(const MetricPolynomial& poly, double tau);

// --- Small-N families ----------------------------------------------------------

MetricSample metric_n2_alpha(double tau, double alpha);

struct N2FamilyPoint {
  double nu = 0.0;
  double rho = 0.0;
  int eps = 1;
  double alpha = 0.0;
  double r = 1.0;
  // Spectral weights reproducing the same metric (up to scale) from unit
  // conjugate eigenvectors: (sin^2 alpha, cos^2 alpha).
  double kappa_plus = 0.0;
  double kappa_minus = 0.0;
};

struct HyperbolicMetric {
  MetricSample sample;
  double induced_tau = 0.0;
  N2FamilyPoint point;
};

MetricSample n2_hyperbolic_matrix(double nu, double rho);
HyperbolicMetric metric_n2_hyperbolic(double nu, double rho);

MetricSample metric_n3_gfamily(double tau, double g);

// Closed-form eigenvalues of the N = 3 g-family, ascending by formula index
// (theta_1, theta_2, theta_3), not sorted.
std::array<double, 3> n3_gfamily_eigenvalues(double tau, double g);

// Smallest tau in [0, 1] where the N = 3 g-family loses positivity.
std::optional<double> positivity_boundary_n3(double g);

// --- Closed-form spectrum ------------------------------------------------------

std::int64_t binomial(int n, int k);

struct PascalTable {
  int n = 0;
  std::vector<std::int64_t> c;  // row-major, n x n

  // 1-based, C_km
  std::int64_t at(int k, int m) const { return c.at((k - 1) * n + (m - 1)); }
};

inline constexpr int kMaxPascalDimension = 62;

PascalTable pascal_table(int n);

// theta_k(tau) = sum_m C_km tau^(m-1)
double pascal_eigenvalue(const PascalTable& table, int k, double tau);
RealVector metric_eigenvalues_closed(int n, double tau);

// theta_max / theta_min; positivity error if theta_min <= 0.
double anisotropy(const MetricSample& sample);

// Theta = sum_n kappa_n |psi_n>> <<psi_n| over unit conjugate eigenvectors,
// kappa indexed by ascending energy.
MetricSample spectral_metric(int n, double tau, const RealVector& kappa);

struct AnisotropyOptimum {
  RealVector kappa;  // sums to 1
  MetricSample sample;
  int evaluations = 0;
};

inline constexpr int kAnisotropyBudget = 200000;

// Throws ConvergenceError carrying the best kappa if `budget` objective
// evaluations do not suffice.
AnisotropyOptimum minimize_anisotropy(int n, double tau, int budget = kAnisotropyBudget);

}  // namespace jbtoy

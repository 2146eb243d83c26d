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

// Reference computations used by the test suites. Nothing here calls into the
// library: every quantity is rebuilt from its definition, transcribed from the
// published formulas, or computed with a different algorithm (long double
// eigensolvers, integer polynomial products, an independently assembled
// linear system).

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace oracle {

using Matrix = Eigen::MatrixXd;
using LMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;

// ---- Model ---------------------------------------------------------------------

// H(tau) from the defining entries, in long double.
LMatrix hamiltonian(int n, long double tau);

// Sorted real parts of the eigenvalues of `hamiltonian(n, tau)` from a general
// (nonsymmetric) long double eigensolve.
std::vector<long double> energies_numeric(int n, long double tau);

// (2k - N - 1) sqrt(1 - tau^2), k = 1..N.
std::vector<long double> energies_closed(int n, long double tau);

// ---- Published literals ------------------------------------------------------------

// The displayed Hamiltonians for N = 2, 3, 4.
Matrix published_hamiltonian(int n, double tau);

// The displayed minimal metrics for N = 2, 3, 4.
Matrix published_metric(int n, double tau);

// N = 3 one-parameter family and its three eigenvalues (unsorted, as listed).
Matrix published_metric_g(double tau, double g);
std::array<double, 3> published_g_eigenvalues(double tau, double g);

// N = 4 eigenvalues as listed (unsorted).
std::array<double, 4> published_n4_eigenvalues(double tau);

// N = 2 alpha-family and its eigenvalues 1 +- sqrt(1 - r^2 sin^2 2 alpha).
Matrix published_metric_alpha(double tau, double alpha);
std::array<double, 2> published_alpha_eigenvalues(double tau, double alpha);

// alpha(3) arrays for N = 5 and N = 6.
Matrix published_alpha3(int n);

// Full M(3) and M(4) for N = 7.
Matrix published_m7(int k);

// Rows of the four published Pascal-type tables; k = 1..4, N = k..8.
std::vector<std::int64_t> published_table_row(int k, int n);

// Real S with Sigma = i S for N = 2.
Matrix published_coriolis_n2(double tau);

// ---- Derived closed forms ----------------------------------------------------------

// Coefficients of (1 - t)^(k-1) (1 + t)^(N-k) by integer convolution.
std::vector<std::int64_t> product_coefficients(int k, int n);

// (1 - tau)^(k-1) (1 + tau)^(N-k), k = 1..N, sorted ascending.
std::vector<double> metric_eigenvalues_product(int n, double tau);

// ((1 + tau) / (1 - tau))^(N - 1).
double minimal_anisotropy(int n, double tau);

// ---- Linear algebra -----------------------------------------------------------------

// Ascending eigenvalues of a symmetric matrix, computed in long double.
std::vector<long double> sym_eigenvalues(const Matrix& m);

// |H^T Theta - Theta H|_inf / |Theta|_inf with H from `hamiltonian`.
double compatibility_residual(const Matrix& theta, double tau);

double norm_inf(const Matrix& m);

// Central difference of a matrix-valued function.
Matrix central_difference(const std::function<Matrix(double)>& f, double tau, double h);

// Dimension of the solution space of the homogeneous power-matched system
// for the polynomial metric with unknowns restricted to the published
// k x (N-k+1) coefficient layout, after fixing M(1) = I. Built from scratch
// and ranked with a full-pivot LU in long double.
int polynomial_nullity(int n);

// ---- Process helpers -----------------------------------------------------------------

struct ProcessResult {
  int exit_code = -1;
  std::string out;
};

// Runs a shell command, capturing stdout (stderr is left alone unless the
// command redirects it).
ProcessResult run(const std::string& command);

// Minimal CSV reader for the tables the CLI writes: header row, then rows
// of comma-separated fields, LF line ends, RFC 4180 quotes within a line.
struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  int column(const std::string& name) const;  // -1 if absent
};

Csv parse_csv(const std::string& text);

}  // namespace oracle

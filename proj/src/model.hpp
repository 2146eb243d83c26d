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

// The N-level toy Hamiltonian H(tau) = D + tau A with
//   D = diag(2n - N - 1),  A[n, n+1] = -A[n+1, n] = sqrt(n (N - n)),
// its closed-form spectrum and its right / conjugate eigenvectors.

#include <cmath>

#include "densecore.hpp"

namespace jbtoy {

struct ModelInstance {
  int n = 0;
  double tau = 0.0;
  RealMatrix diagonal;  // D
  RealMatrix coupling;  // A, antisymmetric, bidiagonal

  RealMatrix hamiltonian() const { return diagonal + tau * coupling; }
};

// H(tau) in any scalar type Eigen can factor; the test oracles use long
// double. No argument checks.
template <class Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> hamiltonian_matrix(int n, Scalar tau) {
  using std::sqrt;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> h =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
  for (int i = 1; i <= n; ++i) h(i - 1, i - 1) = Scalar(2 * i - n - 1);
  for (int i = 1; i < n; ++i) {
    const Scalar c = sqrt(Scalar(i) * Scalar(n - i)) * tau;
    h(i - 1, i) = c;
    h(i, i - 1) = -c;
  }
  return h;
}

// Throws an argument error for n < 2. Any finite tau is accepted; see
// `tau_is_physical` for the [0, 1] check.
ModelInstance make_model(int n, double tau);
RealMatrix build_hamiltonian(int n, double tau);
bool tau_is_physical(double tau);

struct EnergySpectrum {
  double tau = 0.0;
  RealVector levels;  // ascending, E_n = (2n - N - 1) sqrt(1 - tau^2)
};

EnergySpectrum energies(int n, double tau);

// Right eigenvectors of H and of H^T ("ketkets"), indexed by ascending
// energy. Every vector has unit Euclidean norm; the biorthogonal pairing
// <<psi_m|psi_n> is kept separately so the decay towards tau = 1 stays visible.
struct BiorthogonalSystem {
  int n = 0;
  double tau = 0.0;
  RealVector energies;
  RealMatrix rights;   // columns
  RealMatrix ketkets;  // columns
  RealMatrix overlap;  // ketkets^T * rights
  RealVector pairing;  // diagonal of `overlap`
};

BiorthogonalSystem biorthogonal_system(int n, double tau);

// P = diag(+1, -1, +1, ...).
RealMatrix parity(int n);

// |P H P - H^T|_inf; zero for the whole family.
double pseudo_hermiticity_residual(int n, double tau);

// Smallest singular value of the matrix of unit right eigenvectors. Reaches 0
// at tau = 1 where H becomes a single Jordan block.
double defectiveness_gauge(int n, double tau);

}  // namespace jbtoy

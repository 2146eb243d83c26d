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

// Dyson factorization Theta = Omega^T Omega of the polynomial metric, the
// Coriolis term Sigma = i Omega^-1 dOmega/dtau it induces, the evolution
// generator G = H - Sigma, and the hermitized Hamiltonian Omega H Omega^-1.
//
// The metric family commutes with itself, so its eigenbasis Q does not
// depend on tau and Omega(tau) = diag(sqrt(theta_k(tau))) Q^T. Rows are
// ordered by ascending theta for tau > 0, i.e. by descending Pascal index k.

#include <vector>

#include "densecore.hpp"
#include "metric.hpp"

namespace jbtoy {

class DysonFactorization {
 public:
  explicit DysonFactorization(int n);

  int n() const { return n_; }
  const MetricPolynomial& polynomial() const { return poly_; }

  // Columns are the common eigenvectors of Theta(tau).
  const RealMatrix& basis() const { return q_; }

  // Pascal index k of each basis column.
  const std::vector<int>& branches() const { return branches_; }

  // Largest |off-diagonal| of Q^T M(j) Q relative to |M(j)|, over all j.
  double commutation_defect() const { return commutation_defect_; }

  RealVector thetas(double tau) const;
  // d/dtau log theta_k for each basis column.
  RealVector log_derivatives(double tau) const;

  RealMatrix metric(double tau) const { return poly_.assemble(tau); }
  RealMatrix omega(double tau) const;
  RealMatrix omega_inverse(double tau) const;

 private:
  int n_;
  MetricPolynomial poly_;
  RealMatrix q_;
  std::vector<int> branches_;
  double commutation_defect_ = 0.0;
};

// Sigma(tau) = i * imag, imag real symmetric.
struct CoriolisTerm {
  int n = 0;
  double tau = 0.0;
  RealMatrix imag;

  ComplexMatrix sigma() const { return kI * imag.cast<std::complex<double>>(); }
};

struct Generator {
  int n = 0;
  double tau = 0.0;
  ComplexMatrix g;
};

// Closed form (i/2) Q diag(d log theta_k / dtau) Q^T.
CoriolisTerm coriolis_spectral(const DysonFactorization& f, double tau);
CoriolisTerm coriolis_spectral(int n, double tau);

// i Omega(tau)^-1 (Omega(tau+h) - Omega(tau-h)) / 2h with a numerical inverse.
CoriolisTerm coriolis_numeric(const DysonFactorization& f, double tau, double h);
CoriolisTerm coriolis_numeric(int n, double tau, double h);

// G = H - Sigma; `with_coriolis = false` gives the adiabatic G = H.
Generator generator(const DysonFactorization& f, double tau, bool with_coriolis = true);
Generator generator(int n, double tau, bool with_coriolis = true);

RealMatrix dyson_hamiltonian(const DysonFactorization& f, double tau);
RealMatrix dyson_hamiltonian(int n, double tau);

}  // namespace jbtoy

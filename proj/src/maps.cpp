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

#include "maps.hpp"

#include <cmath>
#include <sstream>

#include "errors.hpp"
#include "model.hpp"

namespace jbtoy {

namespace {

// Theta(1/2) has the well separated spectrum 1.5^(N-1) 3^-(k-1).
constexpr double kReferenceTau = 0.5;
constexpr double kCommutationLimit = 1e-9;

void check_open_tau(double tau) {
  require(std::isfinite(tau) && tau >= 0.0, ErrorKind::Domain,
          "tau must be >= 0");
  if (tau >= 1.0) {
    throw SingularityError(
        "the metric has rank one at tau = 1; Omega is not invertible", 0.0);
  }
}

}  // namespace

DysonFactorization::DysonFactorization(int n)
    : n_(n), poly_(solve_metric_polynomial(n)) {
  const SymEig eig = sym_eig(poly_.assemble(kReferenceTau));
  q_ = eig.vectors;
  branches_.resize(n);
  for (int c = 0; c < n; ++c) branches_[c] = n - c;

  for (const auto& m : poly_.coeffs) {
    RealMatrix rotated = q_.transpose() * m * q_;
    rotated.diagonal().setZero();
    const double scale = std::max(1.0, norm_inf(m));
    commutation_defect_ = std::max(commutation_defect_, norm_inf(rotated) / scale);
  }
  if (commutation_defect_ > kCommutationLimit) {
    std::ostringstream msg;
    msg << "metric family for N=" << n << " does not share a tau-independent"
        << " eigenbasis (defect " << commutation_defect_ << ")";
    fail(ErrorKind::Contract, msg.str());
  }
}

RealVector DysonFactorization::thetas(double tau) const {
  RealVector t(n_);
  // Factorized form of the Pascal polynomials; no cancellation near tau = 1.
  for (int c = 0; c < n_; ++c) {
    const int k = branches_[c];
    t[c] = std::pow(1.0 - tau, k - 1) * std::pow(1.0 + tau, n_ - k);
  }
  return t;
}

RealVector DysonFactorization::log_derivatives(double tau) const {
  RealVector d(n_);
  for (int c = 0; c < n_; ++c) {
    const int k = branches_[c];
    d[c] = -(k - 1) / (1.0 - tau) + (n_ - k) / (1.0 + tau);
  }
  return d;
}

RealMatrix DysonFactorization::omega(double tau) const {
  check_open_tau(tau);
  return thetas(tau).cwiseSqrt().asDiagonal() * q_.transpose();
}

RealMatrix DysonFactorization::omega_inverse(double tau) const {
  check_open_tau(tau);
  return q_ * thetas(tau).cwiseSqrt().cwiseInverse().asDiagonal();
}

CoriolisTerm coriolis_spectral(const DysonFactorization& f, double tau) {
  check_open_tau(tau);
  CoriolisTerm out;
  out.n = f.n();
  out.tau = tau;
  const RealMatrix& q = f.basis();
  out.imag = 0.5 * q * f.log_derivatives(tau).asDiagonal() * q.transpose();
  return out;
}

CoriolisTerm coriolis_spectral(int n, double tau) {
  return coriolis_spectral(DysonFactorization(n), tau);
}

CoriolisTerm coriolis_numeric(const DysonFactorization& f, double tau, double h) {
  check_open_tau(tau);
  const RealMatrix d_omega = finite_diff(
      [&f](double t) { return f.omega(t); }, tau, h, Interval{0.0, 1.0});
  CoriolisTerm out;
  out.n = f.n();
  out.tau = tau;
  out.imag = inverse(f.omega(tau)) * d_omega;
  return out;
}

CoriolisTerm coriolis_numeric(int n, double tau, double h) {
  return coriolis_numeric(DysonFactorization(n), tau, h);
}

Generator generator(const DysonFactorization& f, double tau, bool with_coriolis) {
  check_open_tau(tau);
  Generator out;
  out.n = f.n();
  out.tau = tau;
  out.g = build_hamiltonian(f.n(), tau).cast<std::complex<double>>();
  if (with_coriolis) out.g -= coriolis_spectral(f, tau).sigma();
  return out;
}

Generator generator(int n, double tau, bool with_coriolis) {
  return generator(DysonFactorization(n), tau, with_coriolis);
}

RealMatrix dyson_hamiltonian(const DysonFactorization& f, double tau) {
  return f.omega(tau) * build_hamiltonian(f.n(), tau) * f.omega_inverse(tau);
}

RealMatrix dyson_hamiltonian(int n, double tau) {
  return dyson_hamiltonian(DysonFactorization(n), tau);
}

}  // namespace jbtoy

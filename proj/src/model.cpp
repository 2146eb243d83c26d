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

#include "model.hpp"

#include <cmath>
#include <string>

#include "errors.hpp"

namespace jbtoy {

namespace {

void check_dimension(int n) {
  require(n >= 2, ErrorKind::Argument, "n must be >= 2");
}

void check_tau_closed(double tau) {
  require(std::isfinite(tau), ErrorKind::Domain, "tau must be finite");
  require(tau >= 0.0, ErrorKind::Domain, "tau must be >= 0");
  require(tau <= 1.0, ErrorKind::Domain,
          "tau > 1 lies past the exceptional point (complex spectrum)");
}

// Unit null vector of m, taken as the right singular vector belonging to the
// smallest singular value.
RealVector null_direction(const RealMatrix& m) {
  Eigen::JacobiSVD<RealMatrix> svd(m, Eigen::ComputeFullV);
  RealVector v = svd.matrixV().col(m.cols() - 1);
  fix_sign(v);
  return v;
}

RealMatrix eigenvector_matrix(const RealMatrix& op, const RealVector& levels) {
  const auto n = op.rows();
  RealMatrix vecs(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    vecs.col(k) = null_direction(op - levels[k] * RealMatrix::Identity(n, n));
  }
  return vecs;
}

}  // namespace

bool tau_is_physical(double tau) { return tau >= 0.0 && tau <= 1.0; }

ModelInstance make_model(int n, double tau) {
  check_dimension(n);
  require(std::isfinite(tau), ErrorKind::Domain, "tau must be finite");
  ModelInstance m;
  m.n = n;
  m.tau = tau;
  m.diagonal = RealMatrix::Zero(n, n);
  m.coupling = RealMatrix::Zero(n, n);
  for (int i = 1; i <= n; ++i) m.diagonal(i - 1, i - 1) = 2.0 * i - n - 1;
  for (int i = 1; i < n; ++i) {
    const double c = std::sqrt(static_cast<double>(i) * (n - i));
    m.coupling(i - 1, i) = c;
    m.coupling(i, i - 1) = -c;
  }
  return m;
}

RealMatrix build_hamiltonian(int n, double tau) {
  return make_model(n, tau).hamiltonian();
}

EnergySpectrum energies(int n, double tau) {
  check_dimension(n);
  check_tau_closed(tau);
  const double r = std::sqrt((1.0 - tau) * (1.0 + tau));
  EnergySpectrum s;
  s.tau = tau;
  s.levels.resize(n);
  for (int i = 1; i <= n; ++i) s.levels[i - 1] = (2.0 * i - n - 1) * r;
  return s;
}

BiorthogonalSystem biorthogonal_system(int n, double tau) {
  check_dimension(n);
  check_tau_closed(tau);
  require(tau < 1.0, ErrorKind::Degenerate,
          "H(1) is a Jordan block and has no eigenbasis");

  const RealMatrix h = build_hamiltonian(n, tau);
  BiorthogonalSystem sys;
  sys.n = n;
  sys.tau = tau;
  sys.energies = energies(n, tau).levels;
  sys.rights = eigenvector_matrix(h, sys.energies);
  sys.ketkets = eigenvector_matrix(h.transpose(), sys.energies);
  sys.overlap = sys.ketkets.transpose() * sys.rights;
  sys.pairing = sys.overlap.diagonal();
  return sys;
}

RealMatrix parity(int n) {
  RealMatrix p = RealMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) p(i, i) = (i % 2 == 0) ? 1.0 : -1.0;
  return p;
}

double pseudo_hermiticity_residual(int n, double tau) {
  const RealMatrix h = build_hamiltonian(n, tau);
  const RealMatrix p = parity(n);
  return norm_inf(RealMatrix(p * h * p - h.transpose()));
}

double defectiveness_gauge(int n, double tau) {
  check_dimension(n);
  check_tau_closed(tau);
  const RealMatrix h = build_hamiltonian(n, tau);
  return smallest_singular_value(eigenvector_matrix(h, energies(n, tau).levels));
}

}  // namespace jbtoy

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

#include "densecore.hpp"

#include <cmath>
#include <sstream>

#include "errors.hpp"

namespace jbtoy {

namespace {

constexpr double kSignThreshold = 1e-12;
constexpr double kMaxCondition = 1e14;

double max_abs(const RealMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace

void fix_sign(Eigen::Ref<RealVector> v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > kSignThreshold) {
      if (v[i] < 0) v = -v;
      return;
    }
  }
}

bool is_symmetric(const RealMatrix& m, double rel_tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m - m.transpose()) <= rel_tol * std::max(1.0, max_abs(m));
}

SymEig sym_eig(const RealMatrix& m) {
  require(m.rows() == m.cols() && m.rows() > 0, ErrorKind::Contract,
          "sym_eig: matrix must be square and non-empty");
  require(m.allFinite(), ErrorKind::Contract, "sym_eig: non-finite entry");
  require(is_symmetric(m, 1e-12), ErrorKind::Contract,
          "sym_eig: matrix is not symmetric");

  // Symmetrize so that roundoff in the input does not leak into the solver.
  const RealMatrix sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(sym);
  require(solver.info() == Eigen::Success, ErrorKind::Convergence,
          "sym_eig: eigensolver did not converge");

  SymEig out{solver.eigenvalues(), solver.eigenvectors()};
  for (Eigen::Index c = 0; c < out.vectors.cols(); ++c) {
    fix_sign(out.vectors.col(c));
  }
  return out;
}

RealMatrix nullspace(const RealMatrix& a, double tol) {
  require(tol > 0, ErrorKind::Argument, "nullspace: tol must be positive");
  require(a.rows() > 0 && a.cols() > 0, ErrorKind::Contract,
          "nullspace: empty matrix");

  Eigen::BDCSVD<RealMatrix> svd(a, Eigen::ComputeFullV);
  const RealVector& s = svd.singularValues();
  const double scale = s.size() > 0 ? s[0] : 0.0;

  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s[i] > tol * scale) ++rank;
  }
  RealMatrix basis = svd.matrixV().rightCols(a.cols() - rank);
  for (Eigen::Index c = 0; c < basis.cols(); ++c) fix_sign(basis.col(c));
  return basis;
}

RealVector lstsq(const RealMatrix& a, const RealVector& b) {
  require(a.rows() == b.size(), ErrorKind::Contract,
          "lstsq: row count must equal rhs length");
  if (b.isZero(0.0)) return RealVector::Zero(a.cols());
  Eigen::BDCSVD<RealMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return svd.solve(b);
}

RealVector singular_values(const RealMatrix& m) {
  Eigen::BDCSVD<RealMatrix> svd(m);
  return svd.singularValues();
}

double smallest_singular_value(const RealMatrix& m) {
  const RealVector s = singular_values(m);
  return s.size() == 0 ? 0.0 : s[s.size() - 1];
}

RealMatrix inverse(const RealMatrix& m) {
  require(m.rows() == m.cols() && m.rows() > 0, ErrorKind::Contract,
          "inverse: matrix must be square and non-empty");
  const RealVector s = singular_values(m);
  const double smax = s[0];
  const double smin = s[s.size() - 1];
  if (!(smax > 0) || smin * kMaxCondition <= smax) {
    std::ostringstream msg;
    msg << "inverse: matrix is singular to working precision (sigma_min = "
        << smin << ", sigma_max = " << smax << ")";
    throw SingularityError(msg.str(), smin);
  }
  return m.partialPivLu().inverse();
}

RealMatrix finite_diff(const std::function<RealMatrix(double)>& f, double tau,
                       double h, Interval domain) {
  require(h > 0, ErrorKind::Argument, "finite_diff: step must be positive");
  if (!(tau - h > domain.lo && tau + h < domain.hi)) {
    std::ostringstream msg;
    msg << "finite_diff: stencil [" << tau - h << ", " << tau + h
        << "] leaves the domain (" << domain.lo << ", " << domain.hi << ")";
    fail(ErrorKind::Domain, msg.str());
  }
  return (f(tau + h) - f(tau - h)) / (2.0 * h);
}

double norm_inf(const RealMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().rowwise().sum().maxCoeff();
}

double norm_inf(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().rowwise().sum().maxCoeff();
}

RealMatrix exchange_matrix(int n) {
  RealMatrix j = RealMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) j(i, n - 1 - i) = 1.0;
  return j;
}

}  // namespace jbtoy

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

// Small dense kernel shared by every module. Thin layer over Eigen that adds
// the contract checks and the eigenvector sign convention the model relies on.

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <limits>

namespace jbtoy {

using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr std::complex<double> kI{0.0, 1.0};

struct SymEig {
  RealVector values;   // ascending
  RealMatrix vectors;  // orthonormal columns, sign fixed
};

// Eigen-decomposition of a real symmetric matrix. Each eigenvector is flipped
// so that its first component with magnitude above 1e-12 is positive.
SymEig sym_eig(const RealMatrix& m);

// Orthonormal basis (as columns) of {x : |a x| <= tol |a|}.
RealMatrix nullspace(const RealMatrix& a, double tol);

// Minimum-norm least-squares solution of a x = b.
RealVector lstsq(const RealMatrix& a, const RealVector& b);

// Throws SingularityError when cond(m) >= 1e14.
RealMatrix inverse(const RealMatrix& m);

struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
};

// Central difference (f(tau+h) - f(tau-h)) / 2h. Throws a domain error if
// tau +- h leaves the open interval `domain`.
RealMatrix finite_diff(const std::function<RealMatrix(double)>& f, double tau,
                       double h, Interval domain = {});

RealVector singular_values(const RealMatrix& m);
double smallest_singular_value(const RealMatrix& m);

// Induced infinity norm (max absolute row sum).
double norm_inf(const RealMatrix& m);
double norm_inf(const ComplexMatrix& m);

bool is_symmetric(const RealMatrix& m, double rel_tol);

// Sign convention used throughout: first component with |x| > 1e-12 positive.
void fix_sign(Eigen::Ref<RealVector> v);

// J: ones on the antidiagonal.
RealMatrix exchange_matrix(int n);

}  // namespace jbtoy

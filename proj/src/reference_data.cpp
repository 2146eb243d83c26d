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

#include "reference_data.hpp"

#include <cmath>

#include "errors.hpp"

namespace jbtoy::reference {

RealMatrix hamiltonian_literal(int n, double t) {
  const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0);
  RealMatrix h(n, n);
  switch (n) {
    case 2:
      h << -1, t,
           -t, 1;
      break;
    case 3:
      h << -2, s2 * t, 0,
           -s2 * t, 0, s2 * t,
           0, -s2 * t, 2;
      break;
    case 4:
      h << -3, s3 * t, 0, 0,
           -s3 * t, -1, 2 * t, 0,
           0, -2 * t, 1, s3 * t,
           0, 0, -s3 * t, 3;
      break;
    default:
      fail(ErrorKind::Argument, "no literal Hamiltonian for this N");
  }
  return h;
}

RealMatrix metric_literal(int n, double t) {
  const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0);
  const double t2 = t * t, t3 = t2 * t;
  RealMatrix m(n, n);
  switch (n) {
    case 2:
      m << 1, -t,
           -t, 1;
      break;
    case 3:
      m << 1, -s2 * t, t2,
           -s2 * t, 1 + t2, -s2 * t,
           t2, -s2 * t, 1;
      break;
    case 4:
      m << 1, -s3 * t, s3 * t2, -t3,
           -s3 * t, 1 + 2 * t2, -2 * t - t3, s3 * t2,
           s3 * t2, -2 * t - t3, 1 + 2 * t2, -s3 * t,
           -t3, s3 * t2, -s3 * t, 1;
      break;
    default:
      fail(ErrorKind::Argument, "no literal metric for this N");
  }
  return m;
}

std::vector<std::int64_t> pascal_row(int k, int n) {
  using Rows = std::vector<std::vector<std::int64_t>>;
  static const Rows table1 = {
      {1},
      {1, 1},
      {1, 2, 1},
      {1, 3, 3, 1},
      {1, 4, 6, 4, 1},
      {1, 5, 10, 10, 5, 1},
      {1, 6, 15, 20, 15, 6, 1},
      {1, 7, 21, 35, 35, 21, 7, 1},
  };
  static const Rows table2 = {
      {1, -1},
      {1, 0, -1},
      {1, 1, -1, -1},
      {1, 2, 0, -2, -1},
      {1, 3, 2, -2, -3, -1},
      {1, 4, 5, 0, -5, -4, -1},
      {1, 5, 9, 5, -5, -9, -5, -1},
  };
  static const Rows table3 = {
      {1, -2, 1},
      {1, -1, -1, 1},
      {1, 0, -2, 0, 1},
      {1, 1, -2, -2, 1, 1},
      {1, 2, -1, -4, -1, 2, 1},
      {1, 3, 1, -5, -5, 1, 3, 1},
  };
  static const Rows table4 = {
      {1, -3, 3, -1},
      {1, -2, 0, 2, -1},
      {1, -1, -2, 2, 1, -1},
      {1, 0, -3, 0, 3, 0, -1},
      {1, 1, -3, -3, 3, 3, -1, -1},
  };
  static const Rows* tables[] = {&table1, &table2, &table3, &table4};
  if (k < 1 || k > 4 || n < k || n > 8) return {};
  return (*tables[k - 1])[n - k];
}

}  // namespace jbtoy::reference

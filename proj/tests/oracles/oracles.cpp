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


#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <sys/wait.h>

namespace oracle {

LMatrix hamiltonian(int n, long double tau) {
  LMatrix h = LMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) h(i, i) = 2.0L * (i + 1) - n - 1;
  for (int i = 0; i + 1 < n; ++i) {
    const long double c = std::sqrt(static_cast<long double>((i + 1) * (n - i - 1))) * tau;
    h(i, i + 1) = c;
    h(i + 1, i) = -c;
  }
  return h;
}

std::vector<long double> energies_numeric(int n, long double tau) {
  Eigen::EigenSolver<LMatrix> es(hamiltonian(n, tau), /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  std::vector<long double> out;
  for (int i = 0; i < n; ++i) out.push_back(es.eigenvalues()[i].real());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long double> energies_closed(int n, long double tau) {
  std::vector<long double> out;
  const long double s = std::sqrt(1.0L - tau * tau);
  for (int k = 1; k <= n; ++k) out.push_back((2.0L * k - n - 1) * s);
  return out;
}

Matrix published_hamiltonian(int n, double t) {
  const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0);
  Matrix h(n, n);
  if (n == 2) {
    h << -1, t,
         -t, 1;
  } else if (n == 3) {
    h << -2, r2 * t, 0,
         -r2 * t, 0, r2 * t,
         0, -r2 * t, 2;
  } else if (n == 4) {
    h << -3, r3 * t, 0, 0,
         -r3 * t, -1, 2 * t, 0,
         0, -2 * t, 1, r3 * t,
         0, 0, -r3 * t, 3;
  } else {
    throw std::invalid_argument("published_hamiltonian: N in {2,3,4}");
  }
  return h;
}

Matrix published_metric(int n, double t) {
  const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0);
  Matrix m(n, n);
  if (n == 2) {
    // I - tau J
    m << 1, -t,
         -t, 1;
  } else if (n == 3) {
    // I - tau (sqrt2 tridiagonal) + tau^2 J
    Matrix tri(3, 3), j(3, 3);
    tri << 0, r2, 0,
           r2, 0, r2,
           0, r2, 0;
    j << 0, 0, 1,
         0, 1, 0,
         1, 0, 0;
    m = Matrix::Identity(3, 3) - t * tri + t * t * j;
  } else if (n == 4) {
    const double t2 = t * t, t3 = t2 * t;
    m << 1, -r3 * t, r3 * t2, -t3,
         -r3 * t, 1 + 2 * t2, -2 * t - t3, r3 * t2,
         r3 * t2, -2 * t - t3, 1 + 2 * t2, -r3 * t,
         -t3, r3 * t2, -r3 * t, 1;
  } else {
    throw std::invalid_argument("published_metric: N in {2,3,4}");
  }
  return m;
}

Matrix published_metric_g(double t, double g) {
  const double r2 = std::sqrt(2.0);
  Matrix m(3, 3);
  m << 1, -r2 * g * t, g * t * t,
       -r2 * g * t, 2 * g - 1 + g * t * t, -r2 * g * t,
       g * t * t, -r2 * g * t, 1;
  return m;
}

std::array<double, 3> published_g_eigenvalues(double t, double g) {
  const double root = std::sqrt(4 * g * g * t * t + g * g - 2 * g + 1);
  return {g * t * t + g - root, 1 - g * t * t, g * t * t + g + root};
}

std::array<double, 4> published_n4_eigenvalues(double t) {
  const double t2 = t * t, t3 = t2 * t;
  return {1 - 3 * t + 3 * t2 - t3, 1 - t - t2 + t3, 1 + 3 * t + 3 * t2 + t3,
          1 + t - t2 - t3};
}

Matrix published_metric_alpha(double t, double alpha) {
  const double r = std::sqrt(1 - t * t);
  const double c = std::cos(2 * alpha);
  Matrix m(2, 2);
  m << 1 + r * c, -std::sqrt(1 - r * r),
       -std::sqrt(1 - r * r), 1 - r * c;
  return m;
}

std::array<double, 2> published_alpha_eigenvalues(double t, double alpha) {
  const double r2 = 1 - t * t;
  const double s = std::sin(2 * alpha);
  const double root = std::sqrt(1 - r2 * s * s);
  return {1 - root, 1 + root};
}

Matrix published_alpha3(int n) {
  const double r6 = std::sqrt(6.0), r10 = std::sqrt(10.0), r2 = std::sqrt(2.0);
  if (n == 5) {
    Matrix a(3, 3);
    a << r6, 3, r6,
         3, 4, 3,
         r6, 3, r6;
    return a;
  }
  if (n == 6) {
    Matrix a(3, 4);
    a << r10, 3 * r2, 3 * r2, r10,
         4, 6, 6, 4,
         r10, 3 * r2, 3 * r2, r10;
    return a;
  }
  throw std::invalid_argument("published_alpha3: N in {5,6}");
}

Matrix published_m7(int k) {
  Matrix m = Matrix::Zero(7, 7);
  if (k == 3) {
    const double a = std::sqrt(15.0), b = std::sqrt(30.0);
    m << 0, 0, a, 0, 0, 0, 0,
         0, 5, 0, b, 0, 0, 0,
         a, 0, 8, 0, 6, 0, 0,
         0, b, 0, 9, 0, b, 0,
         0, 0, 6, 0, 8, 0, a,
         0, 0, 0, b, 0, 5, 0,
         0, 0, 0, 0, a, 0, 0;
    return m;
  }
  if (k == 4) {
    const double a = 2 * std::sqrt(5.0), b = 2 * std::sqrt(10.0), c = 6 * std::sqrt(3.0);
    m << 0, 0, 0, a, 0, 0, 0,
         0, 0, b, 0, b, 0, 0,
         0, b, 0, c, 0, b, 0,
         a, 0, c, 0, c, 0, a,
         0, b, 0, c, 0, b, 0,
         0, 0, b, 0, b, 0, 0,
         0, 0, 0, a, 0, 0, 0;
    return m;
  }
  throw std::invalid_argument("published_m7: k in {3,4}");
}

std::vector<std::int64_t> published_table_row(int k, int n) {
  using Rows = std::vector<std::vector<std::int64_t>>;
  static const Rows t1 = {{1},
                          {1, 1},
                          {1, 2, 1},
                          {1, 3, 3, 1},
                          {1, 4, 6, 4, 1},
                          {1, 5, 10, 10, 5, 1},
                          {1, 6, 15, 20, 15, 6, 1},
                          {1, 7, 21, 35, 35, 21, 7, 1}};
  static const Rows t2 = {{1, -1},
                          {1, 0, -1},
                          {1, 1, -1, -1},
                          {1, 2, 0, -2, -1},
                          {1, 3, 2, -2, -3, -1},
                          {1, 4, 5, 0, -5, -4, -1},
                          {1, 5, 9, 5, -5, -9, -5, -1}};
  static const Rows t3 = {{1, -2, 1},
                          {1, -1, -1, 1},
                          {1, 0, -2, 0, 1},
                          {1, 1, -2, -2, 1, 1},
                          {1, 2, -1, -4, -1, 2, 1},
                          {1, 3, 1, -5, -5, 1, 3, 1}};
  static const Rows t4 = {{1, -3, 3, -1},
                          {1, -2, 0, 2, -1},
                          {1, -1, -2, 2, 1, -1},
                          {1, 0, -3, 0, 3, 0, -1},
                          {1, 1, -3, -3, 3, 3, -1, -1}};
  static const Rows* tables[] = {&t1, &t2, &t3, &t4};
  if (k < 1 || k > 4 || n < k || n > 8) throw std::invalid_argument("published_table_row");
  return (*tables[k - 1])[n - k];
}

Matrix published_coriolis_n2(double t) {
  // Sigma = 1 / (2 i (1 - t^2)) [[t, 1], [1, t]] = i * S
  Matrix s(2, 2);
  s << t, 1,
       1, t;
  return -s / (2 * (1 - t * t));
}

std::vector<std::int64_t> product_coefficients(int k, int n) {
  std::vector<std::int64_t> p{1};
  auto times = [&](std::int64_t sign) {  // multiply by (1 + sign t)
    std::vector<std::int64_t> q(p.size() + 1, 0);
    for (size_t i = 0; i < p.size(); ++i) {
      q[i] += p[i];
      q[i + 1] += sign * p[i];
    }
    p = std::move(q);
  };
  for (int i = 0; i < k - 1; ++i) times(-1);
  for (int i = 0; i < n - k; ++i) times(+1);
  return p;
}

std::vector<double> metric_eigenvalues_product(int n, double tau) {
  std::vector<double> out;
  for (int k = 1; k <= n; ++k)
    out.push_back(std::pow(1 - tau, k - 1) * std::pow(1 + tau, n - k));
  std::sort(out.begin(), out.end());
  return out;
}

double minimal_anisotropy(int n, double tau) {
  return std::pow((1 + tau) / (1 - tau), n - 1);
}

std::vector<long double> sym_eigenvalues(const Matrix& m) {
  const LMatrix lm = m.cast<long double>();
  Eigen::SelfAdjointEigenSolver<LMatrix> es(lm, Eigen::EigenvaluesOnly);
  std::vector<long double> out(es.eigenvalues().data(),
                               es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(out.begin(), out.end());
  return out;
}

double norm_inf(const Matrix& m) { return m.cwiseAbs().rowwise().sum().maxCoeff(); }

double compatibility_residual(const Matrix& theta, double tau) {
  const auto n = static_cast<int>(theta.rows());
  const Matrix h = hamiltonian(n, tau).cast<double>();
  return norm_inf(h.transpose() * theta - theta * h) / norm_inf(theta);
}

Matrix central_difference(const std::function<Matrix(double)>& f, double tau, double h) {
  return (f(tau + h) - f(tau - h)) / (2 * h);
}

int polynomial_nullity(int n) {
  // Unknowns: entries of M(k), k = 2..N, at 0-based (m + j - 2, m + k - j - 1)
  // for 1 <= j <= k, 1 <= m <= N - k + 1.
  struct Slot {
    int k, r, c;
  };
  std::vector<Slot> slots;
  for (int k = 2; k <= n; ++k)
    for (int j = 1; j <= k; ++j)
      for (int m = 1; m <= n - k + 1; ++m) slots.push_back({k, m + j - 2, m + k - j - 1});

  const LMatrix h1 = hamiltonian(n, 1.0L), h0 = hamiltonian(n, 0.0L);
  const LMatrix a = h1 - h0;
  const Eigen::Matrix<long double, Eigen::Dynamic, 1> d = h0.diagonal();

  // Block b (2..N+1) of rows: entries (p, q) of
  //   (d_p - d_q) M(b)_pq + (A M(b-1) + M(b-1) A)_pq = 0,   M(N+1) = 0.
  const int nn = n * n;
  LMatrix sys = LMatrix::Zero(static_cast<Eigen::Index>(n) * nn,
                              static_cast<Eigen::Index>(slots.size()));
  for (size_t s = 0; s < slots.size(); ++s) {
    const auto [k, r, c] = slots[s];
    // M(k) appears in block k through the commutator...
    sys((k - 2) * nn + r * n + c, static_cast<Eigen::Index>(s)) += d[r] - d[c];
    // ...and in block k + 1 through the anticommutator with A.
    const int b = k + 1;
    for (int p = 0; p < n; ++p) {
      sys((b - 2) * nn + p * n + c, static_cast<Eigen::Index>(s)) += a(p, r);  // (A E_rc)_pc
      sys((b - 2) * nn + r * n + p, static_cast<Eigen::Index>(s)) += a(c, p);  // (E_rc A)_rp
    }
  }
  Eigen::FullPivLU<LMatrix> lu(sys);
  lu.setThreshold(1e-14L);
  return static_cast<int>(slots.size()) - static_cast<int>(lu.rank());
}

ProcessResult run(const std::string& command) {
  ProcessResult res;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed: " + command);
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

int Csv::column(const std::string& name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  return it == header.end() ? -1 : static_cast<int>(it - header.begin());
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c != '"') {
        out.back() += c;
      } else if (i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else {
        quoted = false;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  if (quoted) throw std::runtime_error("unterminated quoted field");
  return out;
}

}  // namespace

Csv parse_csv(const std::string& text) {
  Csv csv;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') throw std::runtime_error("CRLF line ending");
    if (line.empty()) continue;
    if (first) {
      csv.header = split(line);
      first = false;
    } else {
      csv.rows.push_back(split(line));
    }
  }
  return csv;
}

}  // namespace oracle

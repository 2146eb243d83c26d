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

#include "metric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include "errors.hpp"
#include "model.hpp"

namespace jbtoy {

namespace {

constexpr double kSolveResidualLimit = 1e-9;
constexpr double kNullspaceTol = 1e-10;

void check_dimension(int n) {
  require(n >= 2, ErrorKind::Argument, "n must be >= 2");
}

void check_tau_closed(double tau) {
  require(std::isfinite(tau) && tau >= 0.0 && tau <= 1.0, ErrorKind::Domain,
          "tau must lie in [0, 1]");
}

std::string nk_label(int n, int k) {
  std::ostringstream s;
  s << "(N=" << n << ", k=" << k << ")";
  return s.str();
}

RealMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = static_cast<Eigen::Index>(rows.begin()->size());
  RealMatrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

// Literal arrays for the middle coefficients that have no closed formula.
std::optional<RealMatrix> literal_array(int n, int k) {
  const double s6 = std::sqrt(6.0), s10 = std::sqrt(10.0), s2 = std::sqrt(2.0);
  const double s15 = std::sqrt(15.0), s30 = std::sqrt(30.0);
  const double s5 = std::sqrt(5.0), s3 = std::sqrt(3.0);
  if (n == 5 && k == 3) {
    return from_rows({{s6, 3, s6}, {3, 4, 3}, {s6, 3, s6}});
  }
  if (n == 6 && k == 3) {
    return from_rows({{s10, 3 * s2, 3 * s2, s10},
                      {4, 6, 6, 4},
                      {s10, 3 * s2, 3 * s2, s10}});
  }
  if (n == 7 && k == 3) {
    return from_rows({{s15, s30, 6, s30, s15},
                      {5, 8, 9, 8, 5},
                      {s15, s30, 6, s30, s15}});
  }
  if (n == 7 && k == 4) {
    return from_rows({{2 * s5, 2 * s10, 2 * s10, 2 * s5},
                      {2 * s10, 6 * s3, 6 * s3, 2 * s10},
                      {2 * s10, 6 * s3, 6 * s3, 2 * s10},
                      {2 * s5, 2 * s10, 2 * s10, 2 * s5}});
  }
  return std::nullopt;
}

double coupling(int n, int i) {
  return std::sqrt(static_cast<double>(i) * (n - i));
}

}  // namespace

MetricSample make_sample(int n, double tau, RealMatrix theta) {
  MetricSample s;
  s.n = n;
  s.tau = tau;
  s.eigenvalues = sym_eig(theta).values;
  s.theta = std::move(theta);
  return s;
}

double compatibility_residual(const RealMatrix& theta, double tau) {
  const auto n = static_cast<int>(theta.rows());
  const RealMatrix h = build_hamiltonian(n, tau);
  const double scale = norm_inf(theta);
  const double r = norm_inf(RealMatrix(h.transpose() * theta - theta * h));
  return scale > 0 ? r / scale : r;
}

// --- Coefficient layout -------------------------------------------------------

std::pair<int, int> coefficient_position(int n, int k, int j, int m) {
  require(k >= 1 && k <= n && j >= 1 && j <= k && m >= 1 && m <= n - k + 1,
          ErrorKind::Argument, "coefficient index out of range");
  return {m + j - 2, m + k - j - 1};
}

bool is_tabulated(int n, int k) {
  if (n < 2 || k < 1 || k > n) return false;
  if (k == 1 || k == 2 || k == n - 1 || k == n) return true;
  return literal_array(n, k).has_value();
}

CoefficientArray coefficient_array(int n, int k) {
  check_dimension(n);
  require(k >= 1 && k <= n, ErrorKind::Argument, "k must lie in 1..N");
  CoefficientArray out;
  out.n = n;
  out.k = k;
  out.values = RealMatrix::Zero(k, n - k + 1);

  if (k == 1 || k == n) {
    out.values.setOnes();
  } else if (k == 2) {
    for (int m = 1; m <= n - 1; ++m) {
      out.values(0, m - 1) = out.values(1, m - 1) = coupling(n, m);
    }
  } else if (k == n - 1) {
    for (int j = 1; j <= n - 1; ++j) {
      out.values(j - 1, 0) = out.values(j - 1, 1) = coupling(n, j);
    }
  } else if (auto lit = literal_array(n, k)) {
    out.values = *lit;
  } else {
    fail(ErrorKind::NotTabulated,
         "no tabulated coefficient array for " + nk_label(n, k) +
             "; use solve_metric_polynomial");
  }
  return out;
}

CoefficientArray read_coefficients(const RealMatrix& mk, int k) {
  const auto n = static_cast<int>(mk.rows());
  CoefficientArray out;
  out.n = n;
  out.k = k;
  out.values.resize(k, n - k + 1);
  for (int j = 1; j <= k; ++j) {
    for (int m = 1; m <= n - k + 1; ++m) {
      const auto [r, c] = coefficient_position(n, k, j, m);
      out.values(j - 1, m - 1) = mk(r, c);
    }
  }
  return out;
}

RealMatrix expand_coefficients(const CoefficientArray& alpha) {
  RealMatrix mk = RealMatrix::Zero(alpha.n, alpha.n);
  for (int j = 1; j <= alpha.k; ++j) {
    for (int m = 1; m <= alpha.n - alpha.k + 1; ++m) {
      const auto [r, c] = coefficient_position(alpha.n, alpha.k, j, m);
      mk(r, c) = alpha.values(j - 1, m - 1);
    }
  }
  return mk;
}

// --- Polynomial metric ---------------------------------------------------------

RealMatrix MetricPolynomial::assemble(double tau) const {
  RealMatrix theta = RealMatrix::Zero(n, n);
  double power = 1.0;
  for (const auto& m : coeffs) {
    theta += power * m;
    power *= -tau;
  }
  return theta;
}

MetricPolynomial solve_metric_polynomial(int n) {
  check_dimension(n);
  require(n <= kMaxSolverDimension, ErrorKind::Argument,
          "n must be <= " + std::to_string(kMaxSolverDimension));
  const ModelInstance model = make_model(n, 0.0);
  const RealMatrix& a = model.coupling;
  const RealVector d = model.diagonal.diagonal();

  struct Slot {
    int k, row, col;
  };
  std::vector<Slot> slots;
  for (int k = 2; k <= n; ++k) {
    for (int j = 1; j <= k; ++j) {
      for (int m = 1; m <= n - k + 1; ++m) {
        const auto [r, c] = coefficient_position(n, k, j, m);
        slots.push_back({k, r, c});
      }
    }
  }

  // Equation blocks k = 2..N+1, each holding the N^2 entries of
  //   [D, M(k)] + A M(k-1) + M(k-1) A,  with M(N+1) = 0.
  const int nn = n * n;
  const auto eq = [&](int block, int i, int j) { return (block - 2) * nn + i * n + j; };
  RealMatrix system = RealMatrix::Zero(static_cast<Eigen::Index>(n) * nn,
                                       static_cast<Eigen::Index>(slots.size()));
  RealVector rhs = RealVector::Zero(system.rows());

  // Known M(1) = I feeds block 2 as 2A.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) rhs[eq(2, i, j)] = -2.0 * a(i, j);
  }

  for (std::size_t u = 0; u < slots.size(); ++u) {
    const auto [k, r, c] = slots[u];
    const auto col = static_cast<Eigen::Index>(u);
    system(eq(k, r, c), col) += d[r] - d[c];
    // A E_rc contributes A(:, r) to column c; E_rc A contributes A(c, :) to row r.
    for (int i = 0; i < n; ++i) system(eq(k + 1, i, c), col) += a(i, r);
    for (int j = 0; j < n; ++j) system(eq(k + 1, r, j), col) += a(c, j);
  }

  MetricPolynomial poly;
  poly.n = n;
  poly.unknowns = static_cast<int>(slots.size());
  RealVector x = RealVector::Zero(0);
  if (!slots.empty()) {
    x = lstsq(system, rhs);
    poly.nullity = static_cast<int>(nullspace(system, kNullspaceTol).cols());
    poly.residual = (system * x - rhs).cwiseAbs().maxCoeff();
  }
  if (poly.residual > kSolveResidualLimit) {
    std::ostringstream msg;
    msg << "compatibility system for N=" << n
        << " has no polynomial solution (residual " << poly.residual << ")";
    fail(ErrorKind::Contract, msg.str());
  }

  poly.coeffs.assign(n, RealMatrix::Zero(n, n));
  poly.coeffs[0].setIdentity();
  for (std::size_t u = 0; u < slots.size(); ++u) {
    const auto& s = slots[u];
    poly.coeffs[s.k - 1](s.row, s.col) = x[static_cast<Eigen::Index>(u)];
  }
  return poly;
}

MetricSample assemble_metric(const MetricPolynomial& poly, double tau) {
  check_tau_closed(tau);
  return make_sample(poly.n, tau, poly.assemble(tau));
}

// --- Small-N families ------------------------------------------------------------

MetricSample metric_n2_alpha(double tau, double alpha) {
  check_tau_closed(tau);
  require(alpha > 0.0 && alpha < M_PI / 2, ErrorKind::Positivity,
          "alpha must lie in (0, pi/2) for a positive metric");
  const double r = std::sqrt((1.0 - tau) * (1.0 + tau));
  const double c = r * std::cos(2.0 * alpha);
  RealMatrix theta(2, 2);
  theta << 1.0 + c, -tau, -tau, 1.0 - c;
  return make_sample(2, tau, std::move(theta));
}

MetricSample n2_hyperbolic_matrix(double nu, double rho) {
  const double ch = std::cosh(nu);
  RealMatrix theta(2, 2);
  theta << ch * std::exp(rho), std::sinh(nu), std::sinh(nu), ch * std::exp(-rho);
  return make_sample(2, -std::tanh(nu) / std::cosh(rho), std::move(theta));
}

HyperbolicMetric metric_n2_hyperbolic(double nu, double rho) {
  require(std::isfinite(nu) && std::isfinite(rho), ErrorKind::Argument,
          "nu and rho must be finite");
  require(nu <= 0.0, ErrorKind::Domain, "nu must be <= 0 for tau >= 0");
  const double tau = -std::tanh(nu) / std::cosh(rho);
  require(tau < 1.0 && std::cosh(rho) * std::abs(std::tanh(nu)) < 1.0,
          ErrorKind::Domain, "rho exceeds rho_max with cosh(rho_max) = 1/tau");

  HyperbolicMetric out;
  out.sample = n2_hyperbolic_matrix(nu, rho);
  out.induced_tau = tau;

  auto& p = out.point;
  p.nu = nu;
  p.rho = rho;
  p.eps = 1;
  p.r = std::sqrt((1.0 - tau) * (1.0 + tau));
  // Scaled to unit half-trace the diagonal reads 1 +- tanh(rho) = 1 +- r cos 2alpha.
  p.alpha = 0.5 * std::acos(std::clamp(std::tanh(rho) / p.r, -1.0, 1.0));
  p.kappa_plus = std::pow(std::sin(p.alpha), 2);
  p.kappa_minus = std::pow(std::cos(p.alpha), 2);
  return out;
}

MetricSample metric_n3_gfamily(double tau, double g) {
  require(std::isfinite(tau) && std::isfinite(g), ErrorKind::Argument,
          "tau and g must be finite");
  const double s2 = std::sqrt(2.0);
  const double t2 = tau * tau;
  RealMatrix theta(3, 3);
  theta << 1.0, -s2 * g * tau, g * t2,
      -s2 * g * tau, 2.0 * g - 1.0 + g * t2, -s2 * g * tau,
      g * t2, -s2 * g * tau, 1.0;
  return make_sample(3, tau, std::move(theta));
}

std::array<double, 3> n3_gfamily_eigenvalues(double tau, double g) {
  const double t2 = tau * tau;
  const double root = std::sqrt(4.0 * g * g * t2 + g * g - 2.0 * g + 1.0);
  return {g * t2 + g - root, 1.0 - g * t2, g * t2 + g + root};
}

std::optional<double> positivity_boundary_n3(double g) {
  require(g > 0.0, ErrorKind::Argument, "g must be positive");
  // theta1 via theta1 * theta3 = g^2 (t^2 - 1/g)(t^2 - 2 + 1/g); the direct
  // difference cancels where theta1 touches zero tangentially (g = 1).
  const auto lowest = [g](double tau) {
    const double t2 = tau * tau;
    const auto e = n3_gfamily_eigenvalues(tau, g);
    const double theta1 = g * g * (t2 - 1.0 / g) * (t2 - 2.0 + 1.0 / g) / e[2];
    return std::min({theta1, g * (1.0 / g - t2), e[2]});
  };
  if (lowest(0.0) <= 0.0) return 0.0;

  // Scan for the first grid point without positivity, then bisect.
  constexpr int kGrid = 4096;
  double lo = 0.0;
  for (int i = 1; i <= kGrid; ++i) {
    const double hi = static_cast<double>(i) / kGrid;
    if (lowest(hi) <= 0.0) {
      double a = lo, b = hi;
      while (b - a > 1e-12) {
        const double mid = 0.5 * (a + b);
        (lowest(mid) <= 0.0 ? b : a) = mid;
      }
      return b;
    }
    lo = hi;
  }
  return std::nullopt;
}

// --- Closed-form spectrum ----------------------------------------------------------

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  // Exact: r * (n - k + i) is always divisible by i at step i.
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

PascalTable pascal_table(int n) {
  require(n >= 1 && n <= kMaxPascalDimension, ErrorKind::Argument,
          "pascal table dimension must lie in 1..62");
  PascalTable t;
  t.n = n;
  t.c.assign(static_cast<std::size_t>(n) * n, 0);
  for (int k = 1; k <= n; ++k) {
    for (int m = 1; m <= n; ++m) {
      std::int64_t sum = 0;
      for (int p = 1; p <= k; ++p) {
        const std::int64_t sign = (p % 2 == 1) ? 1 : -1;
        sum += sign * binomial(k - 1, p - 1) * binomial(n - k, m - p);
      }
      t.c[(k - 1) * n + (m - 1)] = sum;
    }
  }
  return t;
}

double pascal_eigenvalue(const PascalTable& table, int k, double tau) {
  double acc = 0.0;
  for (int m = table.n; m >= 1; --m) acc = acc * tau + static_cast<double>(table.at(k, m));
  return acc;
}

RealVector metric_eigenvalues_closed(int n, double tau) {
  check_tau_closed(tau);
  const PascalTable table = pascal_table(n);
  RealVector out(n);
  for (int k = 1; k <= n; ++k) out[k - 1] = pascal_eigenvalue(table, k, tau);
  std::sort(out.begin(), out.end());
  return out;
}

double anisotropy(const MetricSample& sample) {
  require(sample.eigenvalues.size() > 0, ErrorKind::Argument, "empty metric sample");
  const double lo = sample.eigenvalues.minCoeff();
  const double hi = sample.eigenvalues.maxCoeff();
  require(lo > 0.0, ErrorKind::Positivity, "metric is not positive definite");
  return hi / lo;
}

MetricSample spectral_metric(int n, double tau, const RealVector& kappa) {
  require(kappa.size() == n, ErrorKind::Argument, "kappa must have N entries");
  require((kappa.array() > 0.0).all(), ErrorKind::Positivity,
          "all spectral weights kappa_n must be positive");
  const BiorthogonalSystem sys = biorthogonal_system(n, tau);
  RealMatrix theta = sys.ketkets * kappa.asDiagonal() * sys.ketkets.transpose();
  return make_sample(n, tau, std::move(theta));
}

// --- Anisotropy minimization (independent oracle) -------------------------------------

namespace {

// Plain Nelder-Mead on a smooth objective; deterministic.
struct Simplex {
  std::vector<RealVector> x;
  std::vector<double> f;
};

template <class F>
RealVector nelder_mead(F&& objective, RealVector start, double step,
                       int max_evals, int& evals, bool& converged) {
  const auto dim = start.size();
  Simplex s;
  const auto reset = [&](const RealVector& base) {
    s.x.assign(1, base);
    s.f.assign(1, objective(base));
    ++evals;
    for (Eigen::Index i = 0; i < dim; ++i) {
      RealVector v = base;
      v[i] += step;
      s.x.push_back(v);
      s.f.push_back(objective(v));
      ++evals;
    }
  };
  reset(start);

  std::vector<std::size_t> order(s.x.size());
  double previous_best = std::numeric_limits<double>::infinity();
  int restarts = 0;
  converged = false;
  while (evals < max_evals) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return s.f[a] < s.f[b]; });
    const std::size_t best = order.front(), worst = order.back();
    const std::size_t second = order[order.size() - 2];

    if (s.f[worst] - s.f[best] < 1e-15) {
      // Restart around the best vertex until restarts stop improving.
      if (previous_best - s.f[best] < 1e-15 && restarts > 0) {
        converged = true;
        return s.x[best];
      }
      previous_best = s.f[best];
      ++restarts;
      reset(RealVector(s.x[best]));
      order.resize(s.x.size());
      continue;
    }

    RealVector centroid = RealVector::Zero(dim);
    for (std::size_t i : order) {
      if (i != worst) centroid += s.x[i];
    }
    centroid /= static_cast<double>(dim);

    const RealVector xr = centroid + (centroid - s.x[worst]);
    const double fr = objective(xr);
    ++evals;
    if (fr < s.f[best]) {
      const RealVector xe = centroid + 2.0 * (centroid - s.x[worst]);
      const double fe = objective(xe);
      ++evals;
      if (fe < fr) {
        s.x[worst] = xe;
        s.f[worst] = fe;
      } else {
        s.x[worst] = xr;
        s.f[worst] = fr;
      }
    } else if (fr < s.f[second]) {
      s.x[worst] = xr;
      s.f[worst] = fr;
    } else {
      const bool outside = fr < s.f[worst];
      const RealVector xc = outside ? RealVector(centroid + 0.5 * (xr - centroid))
                                    : RealVector(centroid + 0.5 * (s.x[worst] - centroid));
      const double fc = objective(xc);
      ++evals;
      if (fc < std::min(fr, s.f[worst])) {
        s.x[worst] = xc;
        s.f[worst] = fc;
      } else {
        for (std::size_t i : order) {
          if (i == best) continue;
          s.x[i] = s.x[best] + 0.5 * (s.x[i] - s.x[best]);
          s.f[i] = objective(s.x[i]);
          ++evals;
        }
      }
    }
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < s.f.size(); ++i) {
    if (s.f[i] < s.f[best]) best = i;
  }
  return s.x[best];
}

RealVector weights_from(const RealVector& logits) {
  RealVector kappa(logits.size() + 1);
  kappa.head(logits.size()) = logits.array().exp();
  kappa[logits.size()] = 1.0;
  return kappa / kappa.sum();
}

}  // namespace

AnisotropyOptimum minimize_anisotropy(int n, double tau, int budget) {
  require(n >= 2 && n <= 5, ErrorKind::Argument,
          "anisotropy minimization is limited to 2 <= N <= 5");
  require(tau > 0.0 && tau <= 0.9, ErrorKind::Domain,
          "anisotropy minimization requires 0 < tau <= 0.9");
  require(budget > 0, ErrorKind::Argument, "evaluation budget must be positive");

  const BiorthogonalSystem sys = biorthogonal_system(n, tau);
  const auto log_condition = [&](const RealVector& logits) {
    const RealVector kappa = weights_from(logits);
    const RealMatrix theta = sys.ketkets * kappa.asDiagonal() * sys.ketkets.transpose();
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(theta, Eigen::EigenvaluesOnly);
    const RealVector& ev = es.eigenvalues();
    if (!(ev[0] > 0.0)) return std::numeric_limits<double>::infinity();
    return std::log(ev[ev.size() - 1] / ev[0]);
  };

  int evals = 0;
  bool converged = false;
  const RealVector best = nelder_mead(log_condition, RealVector::Zero(n - 1), 0.5,
                                      budget, evals, converged);
  if (!converged) {
    const RealVector kappa = weights_from(best);
    throw ConvergenceError("anisotropy minimization exhausted its evaluation budget",
                           std::vector<double>(kappa.begin(), kappa.end()));
  }

  AnisotropyOptimum out;
  out.kappa = weights_from(best);
  out.sample = spectral_metric(n, tau, out.kappa);
  out.evaluations = evals;
  return out;
}

}  // namespace jbtoy

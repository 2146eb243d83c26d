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

#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "errors.hpp"
#include "evolution.hpp"
#include "maps.hpp"
#include "metric.hpp"
#include "model.hpp"
#include "reference_data.hpp"

namespace jbtoy {

namespace {

using LongMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;

std::vector<double> tau_grid(double step, double last) {
  std::vector<double> g;
  for (int i = 0; i * step <= last + 1e-12; ++i) g.push_back(i * step);
  return g;
}

std::vector<double> random_taus(unsigned seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  std::vector<double> out(count);
  for (auto& t : out) t = dist(rng);
  return out;
}

// Tracks the worst value of a quantity against a bound.
class Worst {
 public:
  explicit Worst(double bound) : bound_(bound) {}
  void add(double value, const std::string& where) {
    if (std::isnan(worst_)) return;
    if (std::isnan(value) || value > worst_) {
      worst_ = value;
      where_ = where;
    }
  }
  bool ok() const { return !std::isnan(worst_) && worst_ <= bound_; }
  std::string detail() const {
    std::ostringstream s;
    s << "worst " << worst_ << " (bound " << bound_ << ")";
    if (!where_.empty()) s << " at " << where_;
    return s.str();
  }

 private:
  double bound_;
  double worst_ = 0.0;
  std::string where_;
};

std::string at(int n, double tau) {
  std::ostringstream s;
  s << "N=" << n << ", tau=" << tau;
  return s.str();
}

CheckResult from_worst(const std::string& name, const Worst& w) {
  return {name, w.ok(), w.detail()};
}

double max_abs(const RealMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
  require(opt.n_max >= 2, ErrorKind::Argument, "n-max must be >= 2");
  require(opt.n_max <= kMaxSolverDimension, ErrorKind::Argument,
          "n-max must be <= " + std::to_string(kMaxSolverDimension));
  const int n_max = opt.n_max;
  std::vector<CheckResult> out;

  const auto guarded = [&out](const std::string& name, const std::function<CheckResult()>& fn) {
    try {
      out.push_back(fn());
    } catch (const std::exception& e) {
      out.push_back({name, false, std::string("threw: ") + e.what()});
    }
  };

  std::vector<MetricPolynomial> polys;
  for (int n = 2; n <= n_max; ++n) polys.push_back(solve_metric_polynomial(n));
  const auto poly = [&polys](int n) -> const MetricPolynomial& { return polys[n - 2]; };

  guarded("hamiltonian-literals", [&] {
    Worst w(0.0);
    for (int n = 2; n <= std::min(4, n_max); ++n) {
      for (double t : {0.0, 0.1, 0.5, 0.9}) {
        w.add(max_abs(build_hamiltonian(n, t) - reference::hamiltonian_literal(n, t)), at(n, t));
      }
    }
    return from_worst("hamiltonian-literals", w);
  });

  guarded("energy-closed-form", [&] {
    Worst w(1e-10);
    for (int n = 2; n <= n_max; ++n) {
      for (double t : tau_grid(0.05, 0.95)) {
        const LongMatrix h = hamiltonian_matrix<long double>(n, t);
        Eigen::EigenSolver<LongMatrix> es(h, false);
        std::vector<long double> ev(n);
        for (int i = 0; i < n; ++i) ev[i] = es.eigenvalues()[i].real();
        std::sort(ev.begin(), ev.end());
        const RealVector closed = energies(n, t).levels;
        for (int i = 0; i < n; ++i) {
          w.add(static_cast<double>(std::fabs(ev[i] - closed[i])), at(n, t));
        }
      }
    }
    return from_worst("energy-closed-form", w);
  });

  guarded("pseudo-hermiticity", [&] {
    Worst w(0.0);
    for (int n = 2; n <= n_max; ++n) {
      for (double t : {0.0, 0.3, 0.7, 1.0}) w.add(pseudo_hermiticity_residual(n, t), at(n, t));
    }
    return from_worst("pseudo-hermiticity", w);
  });

  guarded("biorthogonality", [&] {
    Worst w(1e-9);
    for (int n = 2; n <= n_max; ++n) {
      for (double t : {0.1, 0.5, 0.9}) {
        const BiorthogonalSystem sys = biorthogonal_system(n, t);
        RealMatrix off = sys.overlap;
        off.diagonal().setZero();
        w.add(max_abs(off), at(n, t));
      }
    }
    return from_worst("biorthogonality", w);
  });

  guarded("metric-uniqueness", [&] {
    int worst = 0;
    int where = 0;
    for (int n = 2; n <= n_max; ++n) {
      if (poly(n).nullity > worst) {
        worst = poly(n).nullity;
        where = n;
      }
    }
    std::ostringstream s;
    s << "max nullspace dimension " << worst;
    if (worst > 0) s << " at N=" << where;
    return CheckResult{"metric-uniqueness", worst == 0, s.str()};
  });

  guarded("metric-literals", [&] {
    Worst w(1e-12);
    for (int n = 2; n <= std::min(4, n_max); ++n) {
      for (double t : {0.1, 0.5, 0.9}) {
        w.add(max_abs(poly(n).assemble(t) - reference::metric_literal(n, t)), at(n, t));
      }
    }
    return from_worst("metric-literals", w);
  });

  guarded("metric-compatibility", [&] {
    Worst w(1e-9);
    const auto taus = random_taus(20260101, 20);
    for (int n = 2; n <= n_max; ++n) {
      for (double t : taus) w.add(compatibility_residual(poly(n).assemble(t), t), at(n, t));
    }
    for (double t : taus) {
      w.add(compatibility_residual(metric_n3_gfamily(t, 0.8).theta, t), "g-family");
      if (t > 0.0 && t < 1.0) {
        w.add(compatibility_residual(metric_n2_alpha(t, 0.3).theta, t), "alpha-family");
      }
    }
    return from_worst("metric-compatibility", w);
  });

  guarded("coefficient-arrays", [&] {
    Worst w(1e-10);
    for (int n = 2; n <= n_max; ++n) {
      for (int k = 1; k <= n; ++k) {
        if (!is_tabulated(n, k)) continue;
        CoefficientArray table = coefficient_array(n, k);
        if (opt.corrupt_coefficients) table.values(0, 0) += 1e-3;
        const CoefficientArray solved = read_coefficients(poly(n).coefficient(k), k);
        std::ostringstream where;
        where << "N=" << n << ", k=" << k;
        w.add(max_abs(solved.values - table.values), where.str());
      }
    }
    return from_worst("coefficient-arrays", w);
  });

  guarded("pascal-tables", [&] {
    std::ostringstream bad;
    bool ok = true;
    for (int n = 1; n <= std::min(8, n_max); ++n) {
      const PascalTable table = pascal_table(n);
      for (int k = 1; k <= std::min(4, n); ++k) {
        const auto row = reference::pascal_row(k, n);
        for (int m = 1; m <= n; ++m) {
          if (table.at(k, m) != row[m - 1]) {
            ok = false;
            bad << " (N=" << n << ", k=" << k << ", m=" << m << ")";
          }
        }
      }
    }
    for (int n = 2; n <= n_max; ++n) {
      const PascalTable table = pascal_table(n);
      for (int k = 2; k <= n; ++k) {
        std::int64_t sum = 0;
        for (int m = 1; m <= n; ++m) sum += table.at(k, m);
        if (sum != 0) {
          ok = false;
          bad << " (row sum N=" << n << ", k=" << k << ")";
        }
      }
    }
    return CheckResult{"pascal-tables", ok, ok ? "tables 1-4 reproduced" : "mismatch" + bad.str()};
  });

  guarded("spectrum-law", [&] {
    Worst w(1e-8);
    for (int n = 2; n <= n_max; ++n) {
      for (double t : tau_grid(0.05, 0.95)) {
        const RealVector num = assemble_metric(poly(n), t).eigenvalues;
        const RealVector closed = metric_eigenvalues_closed(n, t);
        w.add((num - closed).cwiseAbs().maxCoeff() / closed.maxCoeff(), at(n, t));
      }
      // Rank one at the horizon with the surviving eigenvalue 2^(N-1).
      const RealVector at_one = assemble_metric(poly(n), 1.0).eigenvalues;
      const double top = std::ldexp(1.0, n - 1);
      w.add(std::abs(at_one[n - 1] - top), at(n, 1.0));
      w.add(at_one.head(n - 1).cwiseAbs().maxCoeff() / top, at(n, 1.0));
    }
    return from_worst("spectrum-law", w);
  });

  guarded("determinant-law", [&] {
    Worst w(1e-8);
    for (int n = 2; n <= std::min(8, n_max); ++n) {
      for (double t : {0.2, 0.5, 0.8}) {
        const double det = poly(n).assemble(t).determinant();
        const double expected = std::pow(1.0 - t * t, n * (n - 1) / 2.0);
        w.add(std::abs(det / expected - 1.0), at(n, t));
      }
    }
    return from_worst("determinant-law", w);
  });

  guarded("metric-structure", [&] {
    Worst w(1e-10);
    for (int n = 2; n <= n_max; ++n) {
      const RealMatrix j = exchange_matrix(n);
      for (int k = 1; k <= n; ++k) {
        const RealMatrix& m = poly(n).coefficient(k);
        w.add(max_abs(m - m.transpose()), at(n, k));
        w.add(max_abs(j * m * j - m), at(n, k));
      }
      const RealMatrix a = poly(n).assemble(0.3), b = poly(n).assemble(0.8);
      w.add(max_abs(a * b - b * a), at(n, 0.3));
    }
    return from_worst("metric-structure", w);
  });

  guarded("dyson-factorization", [&] {
    Worst w(1e-10);
    for (int n = 2; n <= n_max; ++n) {
      const DysonFactorization f(n);
      for (double t : {0.0, 0.3, 0.6, 0.95}) {
        const RealMatrix theta = f.metric(t);
        const RealMatrix om = f.omega(t);
        w.add(norm_inf(RealMatrix(om.transpose() * om - theta)) / norm_inf(theta), at(n, t));
      }
    }
    return from_worst("dyson-factorization", w);
  });

  guarded("coriolis", [&] {
    Worst w(1e-6);
    for (double t : {0.0, 0.3, 0.7, 0.95}) {
      RealMatrix expected(2, 2);
      expected << t, 1.0, 1.0, t;
      expected *= -1.0 / (2.0 * (1.0 - t * t));
      w.add(max_abs(coriolis_spectral(2, t).imag - expected), at(2, t));
    }
    for (int n = 2; n <= std::min(8, n_max); ++n) {
      const DysonFactorization f(n);
      for (double t : {0.05, 0.3, 0.6, 0.9}) {
        w.add(norm_inf(RealMatrix(coriolis_spectral(f, t).imag -
                                  coriolis_numeric(f, t, 1e-5).imag)),
              at(n, t));
      }
    }
    return from_worst("coriolis", w);
  });

  guarded("hermitization", [&] {
    Worst w(1e-9);
    for (int n = 2; n <= n_max; ++n) {
      const DysonFactorization f(n);
      for (double t : {0.0, 0.4, 0.8}) {
        const RealMatrix h = dyson_hamiltonian(f, t);
        w.add(norm_inf(RealMatrix(h - h.transpose())) / std::max(1.0, norm_inf(h)), at(n, t));
        const RealVector ev = sym_eig(0.5 * (h + h.transpose())).values;
        w.add((ev - energies(n, t).levels).cwiseAbs().maxCoeff(), at(n, t));
      }
    }
    return from_worst("hermitization", w);
  });

  guarded("unitarity", [&] {
    Worst w(1e-8);
    for (int n = 2; n <= std::min(4, n_max); ++n) {
      EvolutionConfig cfg{n, 0.0, 0.5, 1e-3, Frame::SFull};
      const auto traj = evolve(cfg, default_initial_state(n, 0.0));
      w.add(traj.max_relative_drift(), at(n, 0.5));
    }
    return from_worst("unitarity", w);
  });

  return out;
}

}  // namespace jbtoy

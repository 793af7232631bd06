// Shared test utilities: deterministic random matrices, independent small
// oracles, and regression helpers. Oracles here deliberately avoid the
// library code paths they are used to check.

#pragma once

#include "cdd/operator_core.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

namespace cdd::testing {

inline std::mt19937& rng() {
  static std::mt19937 gen(20250811u);
  return gen;
}

inline double uniform(double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  return dist(rng());
}

inline ComplexMatrix random_hermitian(Eigen::Index dim, double scale = 1.0) {
  std::normal_distribution<double> dist(0.0, scale);
  ComplexMatrix m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      m(i, j) = std::complex<double>(dist(rng()), dist(rng()));
    }
  }
  return 0.5 * (m + ComplexMatrix(m.adjoint()));
}

// Hermitian matrix whose eigenvalue gaps are all at least min_gap.
inline ComplexMatrix gapped_random_hermitian(Eigen::Index dim, double min_gap) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    ComplexMatrix m = random_hermitian(dim);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
    bool ok = true;
    for (Eigen::Index n = 1; n < dim; ++n) {
      if (solver.eigenvalues()(n) - solver.eigenvalues()(n - 1) < min_gap) ok = false;
    }
    if (ok) return m;
  }
  throw std::runtime_error("gapped_random_hermitian: no well-separated sample found");
}

// ------------------------- independent 2x2 oracle ---------------------------
// Tiny complex 2x2 algebra on plain arrays, independent of Eigen.

using C = std::complex<double>;
using M2 = std::array<C, 4>;  // row major

inline M2 mul2(const M2& a, const M2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

inline M2 sub2(const M2& a, const M2& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

inline M2 comm2(const M2& a, const M2& b) { return sub2(mul2(a, b), mul2(b, a)); }

inline const M2 kX2{C(0, 0), C(1, 0), C(1, 0), C(0, 0)};
inline const M2 kY2{C(0, 0), C(0, -1), C(0, 1), C(0, 0)};
inline const M2 kZ2{C(1, 0), C(0, 0), C(0, 0), C(-1, 0)};

// ------------------------------ regressions ---------------------------------

// Least-squares slope of log(y) against log(x).
inline double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const std::size_t n = xs.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lx = std::log(xs[i]);
    const double ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// ------------------------- quadrature oracle --------------------------------

// Plain composite Simpson on a fixed fine grid. Used to cross-check the
// adaptive quadrature inside the library.
template <typename F>
double simpson_oracle(F f, double a, double b, int panels) {
  double sum = 0.0;
  const double h = (b - a) / panels;
  for (int i = 0; i < panels; ++i) {
    const double x0 = a + i * h;
    const double x1 = x0 + h;
    sum += (x1 - x0) / 6.0 * (f(x0) + 4.0 * f(0.5 * (x0 + x1)) + f(x1));
  }
  return sum;
}

}  // namespace cdd::testing

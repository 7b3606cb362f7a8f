#include "heron/svd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace heron {

namespace {

// Orthogonalizes the columns of a (m x n, m >= n) by right Jacobi
// rotations, accumulating them into v.
void one_sided_jacobi(Matrix& a, Matrix& v) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  constexpr double kTol = 1e-14;

  for (int sweep = 0; sweep < 100; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0, beta = 0.0, gamma = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
          alpha += a(i, p) * a(i, p);
          beta += a(i, q) * a(i, q);
          gamma += a(i, p) * a(i, q);
        }
        if (std::fabs(gamma) <= kTol * std::sqrt(alpha * beta)) continue;

        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                         (std::fabs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        // An underflowed angle cannot move either column; the residual
        // coupling is below machine noise, so the pair is converged.
        if (s == 0.0) continue;
        rotated = true;
        for (std::size_t i = 0; i < m; ++i) {
          const double aip = a(i, p);
          const double aiq = a(i, q);
          a(i, p) = c * aip - s * aiq;
          a(i, q) = s * aip + c * aiq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double vip = v(i, p);
          const double viq = v(i, q);
          v(i, p) = c * vip - s * viq;
          v(i, q) = s * vip + c * viq;
        }
      }
    }
    if (!rotated) return;
  }
  throw ConvergenceError("svd: one-sided Jacobi did not converge");
}

// Fills column j of u with a unit vector orthogonal to columns of u
// whose index is listed in `fixed`.
void complete_column(Matrix& u, std::size_t j,
                     const std::vector<std::size_t>& fixed) {
  const std::size_t m = u.rows();
  for (std::size_t cand = 0; cand < m; ++cand) {
    std::vector<double> w(m, 0.0);
    w[cand] = 1.0;
    for (std::size_t k : fixed) {
      double dot = 0.0;
      for (std::size_t i = 0; i < m; ++i) dot += w[i] * u(i, k);
      for (std::size_t i = 0; i < m; ++i) w[i] -= dot * u(i, k);
    }
    double nrm = 0.0;
    for (double x : w) nrm += x * x;
    nrm = std::sqrt(nrm);
    if (nrm > 0.5) {
      for (std::size_t i = 0; i < m; ++i) u(i, j) = w[i] / nrm;
      return;
    }
  }
  throw ConvergenceError("svd: failed to complete orthonormal basis");
}

}  // namespace

SingularSpectrum svd(const Matrix& x) {
  const bool transposed = x.rows() < x.cols();
  Matrix a = transposed ? transpose(x) : x;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();

  Matrix v = Matrix::identity(n);
  one_sided_jacobi(a, v);

  std::vector<double> values(n);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += a(i, j) * a(i, j);
    values[j] = std::sqrt(s);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return values[i] > values[j];
  });

  Matrix u(m, n);
  Matrix vr(n, n);
  std::vector<double> sorted(n);
  std::vector<std::size_t> filled;
  std::vector<std::size_t> null_cols;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t src = order[j];
    sorted[j] = values[src];
    for (std::size_t i = 0; i < n; ++i) vr(i, j) = v(i, src);
    if (sorted[j] > 1e-150) {
      for (std::size_t i = 0; i < m; ++i) u(i, j) = a(i, src) / sorted[j];
      filled.push_back(j);
    } else {
      null_cols.push_back(j);
    }
  }
  for (std::size_t j : null_cols) {
    complete_column(u, j, filled);
    filled.push_back(j);
  }

  if (transposed) {
    return SingularSpectrum{std::move(sorted), std::move(vr), std::move(u)};
  }
  return SingularSpectrum{std::move(sorted), std::move(u), std::move(vr)};
}

}  // namespace heron

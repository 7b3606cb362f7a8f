#include "heron/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace heron {

namespace {

void require_symmetric(const Matrix& a, const char* what) {
  if (a.rows() != a.cols()) {
    throw SymmetryError(std::string(what) + ": matrix not square");
  }
  double diff2 = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) {
      const double d = a(i, j) - a(j, i);
      diff2 += 2.0 * d * d;
    }
  const double nf = frobenius_norm(a);
  if (std::sqrt(diff2) > 1e-10 * std::max(1.0, nf)) {
    throw SymmetryError(std::string(what) + ": matrix not symmetric");
  }
}

double offdiag_frobenius(const Matrix& w) {
  double s = 0.0;
  for (std::size_t i = 0; i < w.rows(); ++i)
    for (std::size_t j = 0; j < w.cols(); ++j)
      if (i != j) s += w(i, j) * w(i, j);
  return std::sqrt(s);
}

}  // namespace

SymEig sym_eig(const Matrix& a) {
  require_symmetric(a, "sym_eig");
  const std::size_t n = a.rows();

  // Work on the symmetrized copy so the iteration sees an exactly
  // symmetric matrix.
  Matrix w(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w(i, j) = 0.5 * (a(i, j) + a(j, i));

  Matrix v = Matrix::identity(n);
  const double norm_a = frobenius_norm(w);
  const double stop = 1e-13 * norm_a;

  bool converged = false;
  for (int sweep = 0; sweep < 100; ++sweep) {
    if (offdiag_frobenius(w) <= stop) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = w(p, q);
        if (std::fabs(apq) <= 1e-300) continue;
        const double theta = (w(q, q) - w(p, p)) / (2.0 * apq);
        const double t =
            (theta >= 0.0 ? 1.0 : -1.0) /
            (std::fabs(theta) + std::sqrt(1.0 + theta * theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const double wkp = w(k, p);
          const double wkq = w(k, q);
          w(k, p) = c * wkp - s * wkq;
          w(k, q) = s * wkp + c * wkq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double wpk = w(p, k);
          const double wqk = w(q, k);
          w(p, k) = c * wpk - s * wqk;
          w(q, k) = s * wpk + c * wqk;
        }
        w(p, q) = 0.0;
        w(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  if (!converged && offdiag_frobenius(w) > stop) {
    throw ConvergenceError("sym_eig: Jacobi did not converge in 100 sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return w(i, i) < w(j, j); });

  SymEig out{std::vector<double>(n), Matrix(n, n)};
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = w(order[j], order[j]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
  }
  return out;
}

bool is_psd(const Matrix& y, double tol) {
  const SymEig e = sym_eig(y);
  const double lmin = e.eigenvalues.front();
  const double lmax = e.eigenvalues.back();
  return lmin >= -tol * std::max(1.0, lmax);
}

Matrix rebuild_from_eig(const SymEig& eig, const std::vector<double>& values) {
  const std::size_t n = eig.eigenvalues.size();
  Matrix qd(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) qd(i, j) = eig.vectors(i, j) * values[j];
  return matmul(qd, transpose(eig.vectors));
}

Matrix matrix_power(const Matrix& a, double t) {
  const SymEig e = sym_eig(a);
  const double lmax = e.eigenvalues.back();
  const double lmin = e.eigenvalues.front();
  if (lmin < -1e-12 * std::max(lmax, 0.0)) {
    throw NotPSDError("matrix_power: negative eigenvalue beyond tolerance");
  }
  const bool needs_inverse = t < 0.0;
  if (needs_inverse && lmin <= 1e-12 * std::max(lmax, 0.0)) {
    throw SingularError("matrix_power: singular matrix with negative power");
  }
  std::vector<double> powered(e.eigenvalues.size());
  for (std::size_t i = 0; i < powered.size(); ++i) {
    const double lam = needs_inverse ? e.eigenvalues[i]
                                     : std::max(e.eigenvalues[i], 0.0);
    powered[i] = std::pow(lam, t);
  }
  return rebuild_from_eig(e, powered);
}

}  // namespace heron

#ifndef HERON_EIG_HPP
#define HERON_EIG_HPP

#include <vector>

#include "heron/matrix.hpp"

namespace heron {

/// Spectral decomposition of a symmetric matrix. Eigenvalues ascending,
/// eigenvectors are the columns of `vectors`.
struct SymEig {
  std::vector<double> eigenvalues;
  Matrix vectors;
};

/// Cyclic Jacobi eigensolver. Sweeps until the off-diagonal Frobenius
/// mass drops below 1e-13 * ||A||_F, at most 100 sweeps.
SymEig sym_eig(const Matrix& a);

/// True iff lambda_min(Y) >= -tol * max(1, lambda_max(Y)).
bool is_psd(const Matrix& y, double tol);

/// A^t = Q diag(lambda_i^t) Q^T for symmetric PSD A. Eigenvalues are
/// clamped to zero within 1e-12 * lambda_max; t < 0 requires PD input.
Matrix matrix_power(const Matrix& a, double t);

/// Rebuilds Q diag(f(lambda)) Q^T from an existing decomposition.
Matrix rebuild_from_eig(const SymEig& eig, const std::vector<double>& values);

}  // namespace heron

#endif

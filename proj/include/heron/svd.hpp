#ifndef HERON_SVD_HPP
#define HERON_SVD_HPP

#include <vector>

#include "heron/matrix.hpp"

namespace heron {

/// X = left * diag(values) * right^T with orthonormal columns and
/// singular values in descending order.
struct SingularSpectrum {
  std::vector<double> values;
  Matrix left;
  Matrix right;
};

/// One-sided Jacobi SVD.
SingularSpectrum svd(const Matrix& x);

}  // namespace heron

#endif

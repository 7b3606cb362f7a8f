#ifndef HERON_MEANS_HPP
#define HERON_MEANS_HPP

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "heron/eig.hpp"
#include "heron/matrix.hpp"

namespace heron {

/// Heron mean F_nu(a,b) = (1-nu) sqrt(ab) + nu (a+b)/2.
double heron_scalar(double a, double b, double nu);

/// Heinz mean H_nu(a,b) = (a^{1-nu} b^nu + a^nu b^{1-nu}) / 2.
double heinz_scalar(double a, double b, double nu);

/// (a+b) / (2 sqrt(ab)); >= 1 with equality iff a = b.
double kantorovich_factor(double a, double b);

/// The (A, X, B) data every functional consumes. A and B are symmetric
/// positive definite; their spectral decompositions are cached so
/// fractional powers are cheap.
class MeanTriple {
 public:
  MeanTriple(Matrix a, Matrix x, Matrix b);

  const Matrix& a() const { return a_; }
  const Matrix& x() const { return x_; }
  const Matrix& b() const { return b_; }
  const SymEig& eig_a() const { return eig_a_; }
  const SymEig& eig_b() const { return eig_b_; }
  std::size_t dim() const { return a_.rows(); }

  Matrix power_a(double t) const;
  Matrix power_b(double t) const;
  /// Operator norm of A^t, read off the cached spectrum.
  double power_a_opnorm(double t) const;
  double power_b_opnorm(double t) const;

  /// Memoized singular spectra of derived matrix expressions, keyed by
  /// (tag, param). The cache is shared across copies of the triple and
  /// guarded by a mutex, so concurrent readers stay safe.
  std::vector<double> cached_spectrum(
      int tag, double param, const std::function<Matrix()>& build) const;

 private:
  struct SpectrumCache {
    std::mutex mutex;
    std::map<std::pair<int, double>, std::vector<double>> entries;
  };

  Matrix a_;
  Matrix x_;
  Matrix b_;
  SymEig eig_a_;
  SymEig eig_b_;
  std::shared_ptr<SpectrumCache> cache_;
};

/// A^nu X B^{1-nu} + A^{1-nu} X B^nu (unnormalized Heinz sum).
Matrix heinz_matrix_sum(const MeanTriple& t, double nu);

/// A^nu X B^{1-nu} - A^{1-nu} X B^nu.
Matrix heinz_matrix_diff(const MeanTriple& t, double nu);

/// (1-alpha) A^{1/2} X B^{1/2} + alpha (AX + XB)/2.
Matrix heron_matrix(const MeanTriple& t, double alpha);

/// Divided-difference matrix of x -> x^r on the nodes mu; positive
/// definite for 0 <= r <= 1.
Matrix loewner_matrix(std::span<const double> mu, double r);

}  // namespace heron

#endif

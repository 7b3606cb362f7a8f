#include "heron/means.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "heron/svd.hpp"

namespace heron {

namespace {

void require_positive(double a, double b, const char* what) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw RangeError(std::string(what) + ": require a, b > 0");
  }
}

std::vector<double> powered(const std::vector<double>& lambda, double t) {
  std::vector<double> out(lambda.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::pow(lambda[i], t);
  return out;
}

}  // namespace

double heron_scalar(double a, double b, double nu) {
  require_positive(a, b, "heron_scalar");
  return (1.0 - nu) * std::sqrt(a * b) + nu * 0.5 * (a + b);
}

double heinz_scalar(double a, double b, double nu) {
  require_positive(a, b, "heinz_scalar");
  return 0.5 * (std::pow(a, 1.0 - nu) * std::pow(b, nu) +
                std::pow(a, nu) * std::pow(b, 1.0 - nu));
}

double kantorovich_factor(double a, double b) {
  require_positive(a, b, "kantorovich_factor");
  return 0.5 * (a + b) / std::sqrt(a * b);
}

MeanTriple::MeanTriple(Matrix a, Matrix x, Matrix b)
    : a_(std::move(a)),
      x_(std::move(x)),
      b_(std::move(b)),
      eig_a_(sym_eig(a_)),
      eig_b_(sym_eig(b_)) {
  const std::size_t n = a_.rows();
  if (a_.cols() != n || b_.rows() != n || b_.cols() != n || x_.rows() != n ||
      x_.cols() != n) {
    throw DimensionError("MeanTriple: A, X, B must all be n x n");
  }
  if (eig_a_.eigenvalues.front() <= 0.0 || eig_b_.eigenvalues.front() <= 0.0) {
    throw NotPSDError("MeanTriple: A and B must be positive definite");
  }
  cache_ = std::make_shared<SpectrumCache>();
}

std::vector<double> MeanTriple::cached_spectrum(
    int tag, double param, const std::function<Matrix()>& build) const {
  const std::pair<int, double> key{tag, param};
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->entries.find(key);
    if (it != cache_->entries.end()) return it->second;
  }
  std::vector<double> values = svd(build()).values;
  std::lock_guard<std::mutex> lock(cache_->mutex);
  return cache_->entries.emplace(key, std::move(values)).first->second;
}

Matrix MeanTriple::power_a(double t) const {
  return rebuild_from_eig(eig_a_, powered(eig_a_.eigenvalues, t));
}

Matrix MeanTriple::power_b(double t) const {
  return rebuild_from_eig(eig_b_, powered(eig_b_.eigenvalues, t));
}

double MeanTriple::power_a_opnorm(double t) const {
  const double lo = std::pow(eig_a_.eigenvalues.front(), t);
  const double hi = std::pow(eig_a_.eigenvalues.back(), t);
  return std::max(lo, hi);
}

double MeanTriple::power_b_opnorm(double t) const {
  const double lo = std::pow(eig_b_.eigenvalues.front(), t);
  const double hi = std::pow(eig_b_.eigenvalues.back(), t);
  return std::max(lo, hi);
}

Matrix heinz_matrix_sum(const MeanTriple& t, double nu) {
  const Matrix first = matmul(t.power_a(nu), matmul(t.x(), t.power_b(1.0 - nu)));
  const Matrix second = matmul(t.power_a(1.0 - nu), matmul(t.x(), t.power_b(nu)));
  return add(first, second);
}

Matrix heinz_matrix_diff(const MeanTriple& t, double nu) {
  const Matrix first = matmul(t.power_a(nu), matmul(t.x(), t.power_b(1.0 - nu)));
  const Matrix second = matmul(t.power_a(1.0 - nu), matmul(t.x(), t.power_b(nu)));
  return sub(first, second);
}

Matrix heron_matrix(const MeanTriple& t, double alpha) {
  const Matrix geo = matmul(t.power_a(0.5), matmul(t.x(), t.power_b(0.5)));
  const Matrix arith = add(matmul(t.a(), t.x()), matmul(t.x(), t.b()));
  return add(scale(1.0 - alpha, geo), scale(0.5 * alpha, arith));
}

Matrix loewner_matrix(std::span<const double> mu, double r) {
  if (!(r >= 0.0) || !(r <= 1.0)) {
    throw RangeError("loewner_matrix: require r in [0, 1]");
  }
  double mu_max = 0.0;
  for (double v : mu) {
    if (!(v > 0.0)) throw RangeError("loewner_matrix: require mu_i > 0");
    mu_max = std::max(mu_max, v);
  }
  const std::size_t n = mu.size();
  Matrix y(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double v;
      if (std::fabs(mu[i] - mu[j]) <= 1e-12 * mu_max) {
        const double mid = 0.5 * (mu[i] + mu[j]);
        v = r * std::pow(mid, r - 1.0);
      } else {
        v = (std::pow(mu[i], r) - std::pow(mu[j], r)) / (mu[i] - mu[j]);
      }
      y(i, j) = v;
      y(j, i) = v;
    }
  }
  return y;
}

}  // namespace heron

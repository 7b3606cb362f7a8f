#include "heron/rng.hpp"

#include <cmath>
#include <numbers>

namespace heron {

double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = 0.0;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(angle);
  has_spare_ = true;
  return r * std::cos(angle);
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                       std::uint64_t d) {
  auto splitmix = [](std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  };
  std::uint64_t h = splitmix(a);
  h = splitmix(h ^ b);
  h = splitmix(h ^ c);
  h = splitmix(h ^ d);
  return h;
}

Matrix random_gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.gaussian();
  return m;
}

Matrix random_orthogonal(std::size_t n, Rng& rng) {
  Matrix q = random_gaussian_matrix(n, n, rng);
  for (std::size_t j = 0; j < n; ++j) {
    for (int attempt = 0;; ++attempt) {
      for (std::size_t k = 0; k < j; ++k) {
        double dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += q(i, j) * q(i, k);
        for (std::size_t i = 0; i < n; ++i) q(i, j) -= dot * q(i, k);
      }
      double nrm = 0.0;
      for (std::size_t i = 0; i < n; ++i) nrm += q(i, j) * q(i, j);
      nrm = std::sqrt(nrm);
      if (nrm > 1e-8) {
        for (std::size_t i = 0; i < n; ++i) q(i, j) /= nrm;
        break;
      }
      if (attempt > 32) {
        throw ConvergenceError("random_orthogonal: degenerate draw");
      }
      for (std::size_t i = 0; i < n; ++i) q(i, j) = rng.gaussian();
    }
  }
  return q;
}

Matrix random_spd(std::size_t n, double m, double big_m, std::uint64_t seed) {
  if (!(m > 0.0) || !(big_m >= m)) {
    throw RangeError("random_spd: require 0 < m <= M");
  }
  Rng rng(seed);
  const Matrix q = random_orthogonal(n, rng);
  std::vector<double> lambda(n);
  for (std::size_t i = 0; i < n; ++i) lambda[i] = rng.uniform(m, big_m);

  Matrix qd(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) qd(i, j) = q(i, j) * lambda[j];
  Matrix out = matmul(qd, transpose(q));
  // Symmetrize away the last few ulps from the two matmuls.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = 0.5 * (out(i, j) + out(j, i));
      out(i, j) = v;
      out(j, i) = v;
    }
  return out;
}

}  // namespace heron

#ifndef HERON_RNG_HPP
#define HERON_RNG_HPP

#include <cstdint>
#include <random>

#include "heron/matrix.hpp"

namespace heron {

/// Deterministic random source: mt19937_64 with a fixed uniform-double
/// mapping and a Box-Muller Gaussian transform, so streams are
/// reproducible across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double gaussian();

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Mixes seed material into one stream seed (splitmix64 finalizer).
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c = 0,
                       std::uint64_t d = 0);

Matrix random_gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng);

/// Orthogonal factor (modified Gram-Schmidt) of a seeded Gaussian matrix.
Matrix random_orthogonal(std::size_t n, Rng& rng);

/// Q diag(lambda) Q^T with lambda_i uniform in [m, M]; deterministic in
/// (n, m, M, seed).
Matrix random_spd(std::size_t n, double m, double big_m, std::uint64_t seed);

}  // namespace heron

#endif

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "heron/norms.hpp"
#include "heron/rng.hpp"

using namespace heron;

namespace {

const std::vector<NormKind> kTestNorms = {
    NormKind::operator_norm(), NormKind::schatten(1.0), NormKind::schatten(2.0),
    NormKind::schatten(3.0),   NormKind::ky_fan(2),     NormKind::trace()};

}  // namespace

TEST_CASE("norm kind factories validate parameters") {
  CHECK_THROWS_AS(NormKind::schatten(0.5), RangeError);
  CHECK_THROWS_AS(NormKind::ky_fan(0), RangeError);
  CHECK(NormKind::schatten(2.0).p == 2.0);
  CHECK(NormKind::ky_fan(3).k == 3);
}

TEST_CASE("norm kind parsing and naming") {
  CHECK(NormKind::parse("operator") == NormKind::operator_norm());
  CHECK(NormKind::parse("trace") == NormKind::trace());
  CHECK(NormKind::parse("schatten:2") == NormKind::schatten(2.0));
  CHECK(NormKind::parse("schatten:1.5") == NormKind::schatten(1.5));
  CHECK(NormKind::parse("kyfan:3") == NormKind::ky_fan(3));
  CHECK_THROWS_AS(NormKind::parse("bogus"), RangeError);
  CHECK_THROWS_AS(NormKind::parse("schatten:"), RangeError);
  CHECK_THROWS_AS(NormKind::parse("schatten:0.5"), RangeError);
  CHECK_THROWS_AS(NormKind::parse("kyfan:x"), RangeError);

  CHECK(NormKind::operator_norm().name() == "operator");
  CHECK(NormKind::trace().name() == "trace");
  CHECK(NormKind::schatten(2.0).name() == "schatten:2");
  CHECK(NormKind::ky_fan(2).name() == "kyfan:2");
  for (const NormKind& k : kTestNorms) {
    CHECK(NormKind::parse(k.name()) == k);
  }
}

TEST_CASE("singular_values examples") {
  const Matrix zero(3, 3);
  for (double v : singular_values(zero)) CHECK(v == 0.0);

  const std::vector<double> d{1.0, 5.0, 3.0};
  const std::vector<double> s = singular_values(Matrix::diagonal(d));
  CHECK(s[0] == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(s[1] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(s[2] == doctest::Approx(1.0).epsilon(1e-12));

  Rng rng(11);
  const Matrix q = random_orthogonal(4, rng);
  for (double v : singular_values(q))
    CHECK(v == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("ui_norm fixed values") {
  const Matrix i2 = Matrix::identity(2);
  CHECK(ui_norm(i2, NormKind::schatten(2.0)) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

  const std::vector<double> d{3.0, 4.0};
  const Matrix m = Matrix::diagonal(d);
  CHECK(ui_norm(m, NormKind::operator_norm()) == doctest::Approx(4.0));
  CHECK(ui_norm(m, NormKind::trace()) == doctest::Approx(7.0));
  CHECK(ui_norm(m, NormKind::schatten(2.0)) == doctest::Approx(5.0));
  CHECK(ui_norm(m, NormKind::ky_fan(1)) == doctest::Approx(4.0));
  CHECK(ui_norm(m, NormKind::ky_fan(2)) == doctest::Approx(7.0));

  CHECK_THROWS_AS(ui_norm(m, NormKind::ky_fan(3)), RangeError);
}

TEST_CASE("unitary invariance over 200 seeded instances") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(mix_seed(606, seed));
    const std::size_t n = 2 + static_cast<std::size_t>(seed % 5);  // up to 6
    const Matrix x = random_gaussian_matrix(n, n, rng);
    const Matrix q = random_orthogonal(n, rng);
    const Matrix r = random_orthogonal(n, rng);
    const Matrix qxr = matmul(q, matmul(x, r));
    for (const NormKind& k : kTestNorms) {
      const double nx = ui_norm(x, k);
      CHECK(std::fabs(ui_norm(qxr, k) - nx) <= 1e-9 * std::max(1.0, nx));
    }
  }
}

TEST_CASE("triangle inequality and homogeneity on random pairs") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(mix_seed(707, seed));
    const std::size_t n = 2 + static_cast<std::size_t>(seed % 4);
    const Matrix x = random_gaussian_matrix(n, n, rng);
    const Matrix y = random_gaussian_matrix(n, n, rng);
    const double c = rng.uniform(-3.0, 3.0);
    for (const NormKind& k : kTestNorms) {
      const double nx = ui_norm(x, k);
      const double ny = ui_norm(y, k);
      CHECK(ui_norm(add(x, y), k) <= nx + ny + 1e-9 * std::max(1.0, nx + ny));
      CHECK(std::fabs(ui_norm(scale(c, x), k) - std::fabs(c) * nx) <=
            1e-9 * std::max(1.0, nx));
    }
  }
}

TEST_CASE("schatten-1, trace and full ky fan coincide") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(mix_seed(808, seed));
    const std::size_t n = 2 + static_cast<std::size_t>(seed % 4);
    const Matrix x = random_gaussian_matrix(n, n, rng);
    const double s1 = ui_norm(x, NormKind::schatten(1.0));
    const double tr = ui_norm(x, NormKind::trace());
    const double kf = ui_norm(x, NormKind::ky_fan(static_cast<int>(n)));
    CHECK(std::fabs(s1 - tr) <= 1e-12 * std::max(1.0, tr));
    CHECK(std::fabs(kf - tr) <= 1e-12 * std::max(1.0, tr));
  }
}

TEST_CASE("gauge monotonicity on dominated diagonal spectra") {
  Rng rng(909);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<double> sx(4);
    std::vector<double> sy(4);
    for (std::size_t i = 0; i < 4; ++i) {
      sx[i] = rng.uniform(0.0, 5.0);
      sy[i] = sx[i] + rng.uniform(0.0, 2.0);
    }
    std::sort(sx.rbegin(), sx.rend());
    std::sort(sy.rbegin(), sy.rend());
    // re-enforce the entrywise domination after sorting
    for (std::size_t i = 0; i < 4; ++i) sy[i] = std::max(sy[i], sx[i]);
    for (const NormKind& k : kTestNorms) {
      CHECK(gauge(sx, k) <= gauge(sy, k) + 1e-12);
    }
  }
}

TEST_CASE("ui_norm_abs_power examples and reduction") {
  const std::vector<double> d{4.0, 9.0};
  const Matrix m = Matrix::diagonal(d);
  CHECK(ui_norm_abs_power(m, 0.5, NormKind::trace()) == doctest::Approx(5.0));
  CHECK(ui_norm_abs_power(Matrix(2, 2), 2.0, NormKind::trace()) == 0.0);
  CHECK_THROWS_AS(ui_norm_abs_power(m, 0.0, NormKind::trace()), RangeError);
  CHECK_THROWS_AS(ui_norm_abs_power(m, -1.0, NormKind::trace()), RangeError);

  Rng rng(1010);
  const Matrix x = random_gaussian_matrix(3, 3, rng);
  for (const NormKind& k : kTestNorms) {
    CHECK(ui_norm_abs_power(x, 1.0, k) ==
          doctest::Approx(ui_norm(x, k)).epsilon(1e-12));
  }
}

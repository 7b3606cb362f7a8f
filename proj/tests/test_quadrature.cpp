#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "heron/errors.hpp"
#include "heron/quadrature.hpp"
#include "heron/rng.hpp"

using namespace heron;

TEST_CASE("simpson is exact for cubics and constants") {
  const QuadratureResult cube =
      integrate([](double x) { return x * x * x; }, 0.0, 1.0, 1e-6);
  CHECK(cube.value == doctest::Approx(0.25).epsilon(1e-14));

  const QuadratureResult one =
      integrate([](double) { return 1.0; }, 0.25, 0.75, 1e-9);
  CHECK(one.value == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("exponential integral hits its closed form") {
  const QuadratureResult r =
      integrate([](double x) { return std::exp(x); }, 0.0, 1.0, 1e-9);
  CHECK(std::fabs(r.value - (std::exp(1.0) - 1.0)) <= 1e-9);
  CHECK(r.error_estimate <= 1e-9);
  CHECK(r.evaluations > 0);
}

TEST_CASE("invalid arguments are rejected") {
  auto f = [](double x) { return x; };
  CHECK_THROWS_AS(integrate(f, 1.0, 0.0, 1e-9), RangeError);
  CHECK_THROWS_AS(integrate(f, 1.0, 1.0, 1e-9), RangeError);
  CHECK_THROWS_AS(integrate(f, 0.0, 1.0, 0.0), RangeError);
  CHECK_THROWS_AS(integrate(f, 0.0, 1.0, -1e-9), RangeError);
}

TEST_CASE("NaN from the integrand raises DomainError") {
  CHECK_THROWS_AS(
      integrate([](double x) { return std::sqrt(x - 0.5); }, 0.0, 1.0, 1e-9),
      DomainError);
}

TEST_CASE("evaluation cap raises ConvergenceError") {
  // Wildly oscillatory near 0; the bisection never settles at this tolerance.
  CHECK_THROWS_AS(integrate([](double x) { return std::sin(1.0 / (x + 1e-14)); },
                            0.0, 1.0, 1e-14),
                  ConvergenceError);
}

TEST_CASE("additivity across a split point") {
  auto f = [](double x) { return std::cos(3.0 * x) + x * x; };
  const double tol = 1e-10;
  const double whole = integrate(f, 0.0, 2.0, tol).value;
  const double left = integrate(f, 0.0, 0.7, tol).value;
  const double right = integrate(f, 0.7, 2.0, tol).value;
  CHECK(std::fabs(left + right - whole) <= 2.0 * tol);
}

TEST_CASE("linearity on random polynomial pairs") {
  Rng rng(31);
  for (int rep = 0; rep < 25; ++rep) {
    double c1[4];
    double c2[4];
    for (int i = 0; i < 4; ++i) {
      c1[i] = rng.uniform(-2.0, 2.0);
      c2[i] = rng.uniform(-2.0, 2.0);
    }
    const double alpha = rng.uniform(-3.0, 3.0);
    const double beta = rng.uniform(-3.0, 3.0);
    auto p1 = [&](double x) {
      return c1[0] + x * (c1[1] + x * (c1[2] + x * c1[3]));
    };
    auto p2 = [&](double x) {
      return c2[0] + x * (c2[1] + x * (c2[2] + x * c2[3]));
    };
    const double tol = 1e-10;
    const double combined =
        integrate([&](double x) { return alpha * p1(x) + beta * p2(x); }, -1.0,
                  1.5, tol)
            .value;
    const double separate = alpha * integrate(p1, -1.0, 1.5, tol).value +
                            beta * integrate(p2, -1.0, 1.5, tol).value;
    CHECK(std::fabs(combined - separate) <=
          2.0 * tol * (1.0 + std::fabs(alpha) + std::fabs(beta)));
  }
}

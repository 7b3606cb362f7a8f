#ifndef HERON_QUADRATURE_HPP
#define HERON_QUADRATURE_HPP

#include <cstdint>
#include <functional>

namespace heron {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::int64_t evaluations = 0;
};

/// Adaptive Simpson on [a, b] with recursive bisection; each interval is
/// accepted when its Richardson estimate falls below the tolerance share
/// of the interval. Hard cap of 1e6 function evaluations.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double tol);

}  // namespace heron

#endif

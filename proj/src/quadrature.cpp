#include "heron/quadrature.hpp"

#include <cmath>

#include "heron/errors.hpp"

namespace heron {

namespace {

constexpr std::int64_t kMaxEvaluations = 1'000'000;

struct Worker {
  const std::function<double(double)>& f;
  std::int64_t evaluations = 0;
  double error_estimate = 0.0;

  double eval(double x) {
    if (++evaluations > kMaxEvaluations) {
      throw ConvergenceError("integrate: evaluation cap exceeded");
    }
    const double v = f(x);
    if (std::isnan(v)) {
      throw DomainError("integrate: integrand returned NaN");
    }
    return v;
  }

  double refine(double a, double b, double fa, double fm, double fb,
                double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = eval(lm);
    const double frm = eval(rm);
    const double h = b - a;
    const double left = (h / 12.0) * (fa + 4.0 * flm + fm);
    const double right = (h / 12.0) * (fm + 4.0 * frm + fb);
    const double err = (left + right - whole) / 15.0;
    if (std::fabs(err) <= tol || depth > 60) {
      error_estimate += std::fabs(err);
      return left + right + err;
    }
    return refine(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           refine(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
  }
};

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double tol) {
  if (!(a < b)) throw RangeError("integrate: require a < b");
  if (!(tol > 0.0)) throw RangeError("integrate: require tol > 0");

  Worker w{f};
  const double m = 0.5 * (a + b);
  const double fa = w.eval(a);
  const double fm = w.eval(m);
  const double fb = w.eval(b);
  const double whole = ((b - a) / 6.0) * (fa + 4.0 * fm + fb);
  const double value = w.refine(a, b, fa, fm, fb, whole, tol, 0);
  return {value, w.error_estimate, w.evaluations};
}

}  // namespace heron

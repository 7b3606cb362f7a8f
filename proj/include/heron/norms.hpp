#ifndef HERON_NORMS_HPP
#define HERON_NORMS_HPP

#include <span>
#include <string>
#include <vector>

#include "heron/matrix.hpp"

namespace heron {

/// Selector for the unitarily invariant norm |||.|||.
struct NormKind {
  enum class Variant { Operator, Schatten, KyFan, Trace };

  Variant variant = Variant::Operator;
  double p = 2.0;  // Schatten exponent
  int k = 1;       // Ky Fan order

  static NormKind operator_norm() { return {Variant::Operator, 0.0, 0}; }
  static NormKind schatten(double p);
  static NormKind ky_fan(int k);
  static NormKind trace() { return {Variant::Trace, 0.0, 0}; }

  /// Accepts "operator", "trace", "schatten:<p>", "kyfan:<k>".
  static NormKind parse(const std::string& text);
  std::string name() const;

  bool operator==(const NormKind&) const = default;
};

/// Singular values of X in descending order.
std::vector<double> singular_values(const Matrix& x);

/// Symmetric gauge function applied to a descending value sequence.
double gauge(std::span<const double> s, const NormKind& kind);

double ui_norm(const Matrix& x, const NormKind& kind);

/// ||| |M|^r ||| computed as the gauge of (s_j(M)^r).
double ui_norm_abs_power(const Matrix& m, double r, const NormKind& kind);

}  // namespace heron

#endif

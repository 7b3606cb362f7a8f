#include "heron/norms.hpp"

#include <cmath>

#include "heron/svd.hpp"

namespace heron {

NormKind NormKind::schatten(double p) {
  if (!(p >= 1.0)) throw RangeError("schatten: require p >= 1");
  return {Variant::Schatten, p, 0};
}

NormKind NormKind::ky_fan(int k) {
  if (k < 1) throw RangeError("kyfan: require k >= 1");
  return {Variant::KyFan, 0.0, k};
}

NormKind NormKind::parse(const std::string& text) {
  if (text == "operator") return operator_norm();
  if (text == "trace") return trace();
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string tail =
      colon == std::string::npos ? std::string() : text.substr(colon + 1);
  try {
    if (head == "schatten" && !tail.empty()) return schatten(std::stod(tail));
    if (head == "kyfan" && !tail.empty()) return ky_fan(std::stoi(tail));
  } catch (const std::logic_error&) {
    // fall through to the error below
  }
  throw RangeError("unknown norm kind: " + text);
}

std::string NormKind::name() const {
  switch (variant) {
    case Variant::Operator:
      return "operator";
    case Variant::Trace:
      return "trace";
    case Variant::Schatten: {
      std::string s = std::to_string(p);
      s.erase(s.find_last_not_of('0') + 1);
      if (!s.empty() && s.back() == '.') s.pop_back();
      return "schatten:" + s;
    }
    case Variant::KyFan:
      return "kyfan:" + std::to_string(k);
  }
  return "?";
}

std::vector<double> singular_values(const Matrix& x) {
  return svd(x).values;
}

double gauge(std::span<const double> s, const NormKind& kind) {
  switch (kind.variant) {
    case NormKind::Variant::Operator:
      return s.empty() ? 0.0 : s.front();
    case NormKind::Variant::Trace: {
      double sum = 0.0;
      for (double v : s) sum += v;
      return sum;
    }
    case NormKind::Variant::Schatten: {
      double sum = 0.0;
      for (double v : s) sum += std::pow(v, kind.p);
      return std::pow(sum, 1.0 / kind.p);
    }
    case NormKind::Variant::KyFan: {
      if (static_cast<std::size_t>(kind.k) > s.size()) {
        throw RangeError("kyfan: k exceeds min(rows, cols)");
      }
      double sum = 0.0;
      for (int j = 0; j < kind.k; ++j) sum += s[static_cast<std::size_t>(j)];
      return sum;
    }
  }
  throw RangeError("gauge: bad norm kind");
}

double ui_norm(const Matrix& x, const NormKind& kind) {
  return gauge(singular_values(x), kind);
}

double ui_norm_abs_power(const Matrix& m, double r, const NormKind& kind) {
  if (!(r > 0.0)) throw RangeError("ui_norm_abs_power: require r > 0");
  std::vector<double> s = singular_values(m);
  for (double& v : s) v = std::pow(v, r);
  return gauge(s, kind);
}

}  // namespace heron

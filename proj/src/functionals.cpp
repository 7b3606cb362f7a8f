#include "heron/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "heron/quadrature.hpp"

namespace heron {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void require_range(bool ok, const char* msg) {
  if (!ok) throw RangeError(msg);
}

// Spectrum-cache tags for the matrix expressions the checkers share.
enum ExprTag : int {
  kHeinzSum = 0,
  kHeinzDiff = 1,
  kHeron = 2,
  kSingleProduct = 3,   // A^s X B^{1-s}
  kPowerCommutator = 4  // A^a X - X B^a
};

std::vector<double> heinz_sum_spectrum(const MeanTriple& t, double nu) {
  return t.cached_spectrum(kHeinzSum, nu,
                           [&] { return heinz_matrix_sum(t, nu); });
}

std::vector<double> heinz_diff_spectrum(const MeanTriple& t, double nu) {
  return t.cached_spectrum(kHeinzDiff, nu,
                           [&] { return heinz_matrix_diff(t, nu); });
}

std::vector<double> heron_spectrum(const MeanTriple& t, double alpha) {
  return t.cached_spectrum(kHeron, alpha,
                           [&] { return heron_matrix(t, alpha); });
}

std::vector<double> product_spectrum(const MeanTriple& t, double s) {
  return t.cached_spectrum(kSingleProduct, s, [&] {
    return matmul(t.power_a(s), matmul(t.x(), t.power_b(1.0 - s)));
  });
}

std::vector<double> power_commutator_spectrum(const MeanTriple& t, double a) {
  return t.cached_spectrum(kPowerCommutator, a, [&] {
    return sub(matmul(t.power_a(a), t.x()), matmul(t.x(), t.power_b(a)));
  });
}

double gauge_pow(std::vector<double> s, double r, const NormKind& k) {
  for (double& v : s) v = std::pow(v, r);
  return gauge(s, k);
}

}  // namespace

double check_tolerance(const std::vector<double>& chain,
                       double tolerance_scale) {
  double peak = 1.0;
  for (double v : chain) peak = std::max(peak, std::fabs(v));
  return tolerance_scale * 1e-8 * peak;
}

CheckResult make_check_result(std::string name,
                              std::vector<std::string> labels,
                              std::vector<double> chain,
                              std::map<std::string, std::string> params,
                              double tolerance_scale) {
  CheckResult r;
  r.name = std::move(name);
  r.labels = std::move(labels);
  r.chain = std::move(chain);
  r.params = std::move(params);
  r.margins.resize(r.chain.size() > 0 ? r.chain.size() - 1 : 0);
  for (std::size_t i = 0; i + 1 < r.chain.size(); ++i) {
    r.margins[i] = r.chain[i + 1] - r.chain[i];
  }
  const double tau = check_tolerance(r.chain, tolerance_scale);
  r.passed = std::all_of(r.margins.begin(), r.margins.end(),
                         [&](double m) { return m >= -tau; });
  return r;
}

double weight_r0(double nu) { return std::min(nu, 1.0 - nu); }

double weight_r2(double nu) {
  return std::min({2.0 * nu - 0.5, std::fabs(1.0 - 2.0 * nu), 1.5 - 2.0 * nu});
}

double weight_t0(double t) { return std::min(t, 1.0 - t); }

double F_of(const MeanTriple& t, const NormKind& k, double nu) {
  return 0.5 * gauge(heinz_sum_spectrum(t, nu), k);
}

double G_of(const MeanTriple& t, const NormKind& k, double alpha) {
  return gauge(heron_spectrum(t, alpha), k);
}

double K_of(const MeanTriple& t, const NormKind& k, double nu) {
  return gauge(heinz_diff_spectrum(t, nu), k);
}

double phi_of(const MeanTriple& t, const NormKind& k, double s, double r) {
  if (!(r > 0.0)) throw RangeError("phi_of: require r > 0");
  return gauge_pow(product_spectrum(t, s), r, k) *
         gauge_pow(product_spectrum(t, 1.0 - s), r, k);
}

double integral_of_F(const MeanTriple& t, const NormKind& k) {
  return integrate([&](double nu) { return F_of(t, k, nu); }, 0.25, 0.75, 1e-9)
      .value;
}

double integral_of_K(const MeanTriple& t, const NormKind& k) {
  return integrate([&](double nu) { return K_of(t, k, nu); }, 0.25, 0.75, 1e-9)
      .value;
}

CheckResult check_t1(const MeanTriple& t, const NormKind& k, double nu,
                     double alpha) {
  require_range(nu >= 0.25 && nu <= 0.75, "check_t1: nu outside [1/4, 3/4]");
  require_range(alpha >= 0.5, "check_t1: alpha < 1/2");
  const double r0 = weight_r0(nu);
  const double f_nu = F_of(t, k, nu);
  const double f_half = F_of(t, k, 0.5);
  const double g = G_of(t, k, alpha);
  const double mid = (4.0 * r0 - 1.0) * f_half + 2.0 * (1.0 - 2.0 * r0) * g;
  return make_check_result(
      "check_t1", {"F(nu)", "(4r0-1)F(1/2)+2(1-2r0)G(alpha)", "G(alpha)"},
      {f_nu, mid, g}, {{"nu", fmt(nu)}, {"alpha", fmt(alpha)}});
}

CheckResult check_t1_integral(const MeanTriple& t, const NormKind& k,
                              double alpha, double integral_f) {
  require_range(alpha >= 0.5, "check_t1_integral: alpha < 1/2");
  const double f_half = F_of(t, k, 0.5);
  const double lhs = f_half + 2.0 * (2.0 * integral_f - f_half);
  const double g = G_of(t, k, alpha);
  return make_check_result("check_t1_integral",
                           {"F(1/2)+2(2*intF-F(1/2))", "G(alpha)"}, {lhs, g},
                           {{"alpha", fmt(alpha)}});
}

CheckResult check_t1_integral(const MeanTriple& t, const NormKind& k,
                              double alpha) {
  return check_t1_integral(t, k, alpha, integral_of_F(t, k));
}

CheckResult check_t20(const MeanTriple& t, const NormKind& k, double nu,
                      double alpha) {
  require_range(nu >= 0.25 && nu <= 0.75, "check_t20: nu outside [1/4, 3/4]");
  require_range(alpha >= 0.5, "check_t20: alpha < 1/2");
  const double r0 = weight_r0(nu);
  const double r2 = weight_r2(nu);
  const double f_half = F_of(t, k, 0.5);
  const double g = G_of(t, k, alpha);
  const double l1 = (4.0 * r0 - 1.0) * f_half + 2.0 * (1.0 - 2.0 * r0) * g;
  const double l2 = 2.0 * r2 * f_half + (1.0 - 2.0 * r2) * g;
  return make_check_result(
      "check_t20",
      {"(4r0-1)F(1/2)+2(1-2r0)G(alpha)", "2r2*F(1/2)+(1-2r2)G(alpha)"},
      {l1, l2}, {{"nu", fmt(nu)}, {"alpha", fmt(alpha)}});
}

CheckResult check_kantorovich_s2(const MeanTriple& t, double nu, double m,
                                 double big_m) {
  require_range(nu >= 0.0 && nu <= 1.0,
                "check_kantorovich_s2: nu outside [0, 1]");
  const double slack = 1e-9 * std::max(1.0, big_m);
  const bool bounded =
      t.eig_a().eigenvalues.front() >= m - slack &&
      t.eig_a().eigenvalues.back() <= big_m + slack &&
      t.eig_b().eigenvalues.front() >= m - slack &&
      t.eig_b().eigenvalues.back() <= big_m + slack;
  if (!bounded) {
    throw SpectrumBoundsError(
        "check_kantorovich_s2: m, M do not bound the spectra of A, B");
  }
  const NormKind s2 = NormKind::schatten(2.0);
  const double lhs = F_of(t, s2, nu);
  const double factor = std::pow(kantorovich_factor(m, big_m), 1.0 - nu);
  const double rhs = factor * G_of(t, s2, nu);
  return make_check_result(
      "check_kantorovich_s2",
      {"||heinz(nu)/2||_2", "kantorovich^{1-nu} * ||heron(nu)||_2"},
      {lhs, rhs}, {{"nu", fmt(nu)}, {"m", fmt(m)}, {"M", fmt(big_m)}});
}

CheckResult check_t2(const MeanTriple& t, const NormKind& k, double nu) {
  require_range(nu >= 0.25 && nu <= 0.75, "check_t2: nu outside [1/4, 3/4]");
  const double r0 = weight_r0(nu);
  const double lhs = K_of(t, k, nu);
  const double rhs = 2.0 * (1.0 - 2.0 * r0) * K_of(t, k, 0.25);
  return make_check_result("check_t2", {"K(nu)", "2(1-2r0)K(1/4)"}, {lhs, rhs},
                           {{"nu", fmt(nu)}});
}

CheckResult check_t2_integral(const MeanTriple& t, const NormKind& k) {
  const double integral = integral_of_K(t, k);
  const double quarter = 0.25 * K_of(t, k, 0.25);
  const double eighth = 0.125 * K_of(t, k, 1.0);
  return make_check_result("check_t2_integral",
                           {"int K", "K(1/4)/4", "K(1)/8"},
                           {integral, quarter, eighth}, {});
}

CheckResult check_heinz_diff_classical(const MeanTriple& t, const NormKind& k,
                                       double nu) {
  require_range(nu >= 0.0 && nu <= 1.0,
                "check_heinz_diff_classical: nu outside [0, 1]");
  const double lhs = K_of(t, k, nu);
  const double rhs = std::fabs(2.0 * nu - 1.0) *
                     gauge(power_commutator_spectrum(t, 1.0), k);
  return make_check_result("check_heinz_diff_classical",
                           {"K(nu)", "|2nu-1| * |||AX-XB|||"}, {lhs, rhs},
                           {{"nu", fmt(nu)}});
}

CheckResult check_gen_diff(const MeanTriple& t, const NormKind& k,
                           double alpha, double nu) {
  require_range(alpha >= 1.0, "check_gen_diff: alpha < 1");
  require_range(nu >= 0.5 * (1.0 - alpha) && nu <= 0.5 * (1.0 + alpha),
                "check_gen_diff: nu outside [(1-alpha)/2, (1+alpha)/2]");
  const double lhs = alpha * K_of(t, k, nu);
  const double op_factor =
      std::max(t.power_a_opnorm(1.0 - alpha), t.power_b_opnorm(1.0 - alpha));
  const double rhs = std::fabs(2.0 * nu - 1.0) * op_factor *
                     gauge(power_commutator_spectrum(t, alpha), k);
  return make_check_result(
      "check_gen_diff",
      {"alpha*K(nu)",
       "|2nu-1| * max(||A^{1-a}||,||B^{1-a}||) * |||A^a X - X B^a|||"},
      {lhs, rhs}, {{"nu", fmt(nu)}, {"alpha", fmt(alpha)}});
}

CheckResult check_power_diff(const MeanTriple& t, const NormKind& k,
                             double r) {
  require_range(r > 0.0 && r <= 1.0, "check_power_diff: r outside (0, 1]");
  const double lhs = gauge(power_commutator_spectrum(t, r), k);
  const double op_factor =
      std::max(t.power_a_opnorm(r - 1.0), t.power_b_opnorm(r - 1.0));
  const double rhs =
      r * op_factor * gauge(power_commutator_spectrum(t, 1.0), k);
  return make_check_result(
      "check_power_diff",
      {"|||A^r X - X B^r|||",
       "r * max(||A^{r-1}||,||B^{r-1}||) * |||AX-XB|||"},
      {lhs, rhs}, {{"r", fmt(r)}});
}

CheckResult check_reverse_heinz(const MeanTriple& t, const NormKind& k,
                                double nu) {
  require_range(nu < 0.0 || nu > 1.0, "check_reverse_heinz: nu inside [0, 1]");
  const double big = K_of(t, k, nu);
  const double small = std::fabs(2.0 * nu - 1.0) *
                       gauge(power_commutator_spectrum(t, 1.0), k);
  return make_check_result("check_reverse_heinz",
                           {"|2nu-1| * |||AX-XB|||", "K(nu)"}, {small, big},
                           {{"nu", fmt(nu)}});
}

CheckResult check_convexity_extension(const MeanTriple& t, const NormKind& k,
                                      std::span<const double> grid) {
  require_range(grid.size() >= 2, "check_convexity_extension: grid too short");
  double worst_gap = -std::numeric_limits<double>::infinity();
  double worst_at = grid[0];
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double a = grid[i];
    const double b = grid[i + 1];
    const double mid = 0.5 * (a + b);
    const double gap =
        K_of(t, k, mid) - 0.5 * (K_of(t, k, a) + K_of(t, k, b));
    if (gap > worst_gap) {
      worst_gap = gap;
      worst_at = mid;
    }
  }
  return make_check_result("check_convexity_extension",
                           {"max midpoint gap of K", "0"}, {worst_gap, 0.0},
                           {{"grid_lo", fmt(grid.front())},
                            {"grid_hi", fmt(grid.back())},
                            {"worst_at", fmt(worst_at)}});
}

CheckResult check_corollary_sum(const MeanTriple& t, const NormKind& k,
                                double nu, int n_terms,
                                const std::string& branch) {
  require_range(n_terms >= 1, "check_corollary_sum: N must be >= 1");
  double lhs;
  if (branch == "nonneg") {
    require_range(nu >= 0.0, "check_corollary_sum: branch nonneg needs nu >= 0");
    lhs = K_of(t, k, 0.0);
    for (int j = 1; j <= n_terms; ++j) {
      const double w = std::ldexp(nu, j);  // 2^j * nu
      const double mid = std::ldexp(1.0, -j);
      lhs += w * (0.5 * (K_of(t, k, 0.0) + K_of(t, k, 2.0 * mid)) -
                  K_of(t, k, mid));
    }
  } else if (branch == "le_minus_one") {
    require_range(nu <= -1.0,
                  "check_corollary_sum: branch le_minus_one needs nu <= -1");
    lhs = K_of(t, k, 0.0);
    for (int j = 1; j <= n_terms; ++j) {
      const double w = std::ldexp(1.0 + nu, j);
      const double mid = std::ldexp(1.0, -j);
      lhs -= w * (0.5 * (K_of(t, k, 1.0) + K_of(t, k, 1.0 - 2.0 * mid)) -
                  K_of(t, k, 1.0 - mid));
    }
  } else {
    throw RangeError("check_corollary_sum: unknown branch " + branch);
  }
  const double rhs = K_of(t, k, -nu);
  return make_check_result(
      "check_corollary_sum", {"K(0)+jensen sum", "K(-nu)"}, {lhs, rhs},
      {{"nu", fmt(nu)}, {"N", std::to_string(n_terms)}, {"branch", branch}});
}

CheckResult check_jensen_bounds(const std::function<double(double)>& f,
                                const JensenParams& p) {
  require_range(p.lambda >= 0.0 && p.lambda <= 1.0,
                "check_jensen_bounds: lambda outside [0, 1]");
  const double lmin = std::min(p.lambda, 1.0 - p.lambda);
  const double lmax = std::max(p.lambda, 1.0 - p.lambda);
  const double delta =
      0.5 * (f(p.x1) + f(p.x2)) - f(0.5 * (p.x1 + p.x2));
  const double middle = p.lambda * f(p.x1) + (1.0 - p.lambda) * f(p.x2) -
                        f(p.lambda * p.x1 + (1.0 - p.lambda) * p.x2);
  return make_check_result(
      "check_jensen_bounds", {"2*lmin*delta", "jensen functional", "2*lmax*delta"},
      {2.0 * lmin * delta, middle, 2.0 * lmax * delta},
      {{"lambda", fmt(p.lambda)}, {"x1", fmt(p.x1)}, {"x2", fmt(p.x2)}});
}

CheckResult check_hermite_hadamard_gap(const std::function<double(double)>& f,
                                       double x1, double x2) {
  require_range(x1 < x2, "check_hermite_hadamard_gap: require x1 < x2");
  const double delta = 0.5 * (f(x1) + f(x2)) - f(0.5 * (x1 + x2));
  const double mean = integrate(f, x1, x2, 1e-9).value / (x2 - x1);
  const double middle = 0.5 * (f(x1) + f(x2)) - mean;
  return make_check_result(
      "check_hermite_hadamard_gap", {"delta/2", "avg - integral mean", "3*delta/2"},
      {0.5 * delta, middle, 1.5 * delta}, {{"x1", fmt(x1)}, {"x2", fmt(x2)}});
}

CheckResult check_conde(const MeanTriple& t, const NormKind& k, double nu,
                        double alpha) {
  require_range(nu >= 0.25 && nu <= 0.75, "check_conde: nu outside [1/4, 3/4]");
  require_range(alpha >= 0.5, "check_conde: alpha < 1/2");
  const double r0 = weight_r0(nu);
  const double lmin = std::min(2.0 - 4.0 * r0, 4.0 * r0 - 1.0);
  const double f_nu = F_of(t, k, nu);
  const double f_quarter = F_of(t, k, 0.25);
  const double f_half = F_of(t, k, 0.5);
  const double f_mid = F_of(t, k, 0.375);
  const double g = G_of(t, k, alpha);
  const double refined =
      f_nu + 2.0 * lmin * (0.5 * (f_quarter + f_half) - f_mid);
  const double upper = (4.0 * r0 - 1.0) * f_half + 2.0 * (1.0 - 2.0 * r0) * g;
  return make_check_result(
      "check_conde",
      {"F(nu)", "F(nu)+2*lmin*gap", "(4r0-1)F(1/2)+2(1-2r0)G(alpha)",
       "G(alpha)"},
      {f_nu, refined, upper, g}, {{"nu", fmt(nu)}, {"alpha", fmt(alpha)}});
}

CheckResult check_integral_refinement(const MeanTriple& t, const NormKind& k,
                                      double alpha, double integral_f) {
  require_range(alpha >= 0.5, "check_integral_refinement: alpha < 1/2");
  const double f_quarter = F_of(t, k, 0.25);
  const double f_half = F_of(t, k, 0.5);
  const double f_mid = F_of(t, k, 0.375);
  const double lhs = f_half + (0.5 * (f_quarter + f_half) - f_mid) +
                     2.0 * (2.0 * integral_f - f_half);
  const double g = G_of(t, k, alpha);
  return make_check_result("check_integral_refinement",
                           {"refined integral bound", "G(alpha)"}, {lhs, g},
                           {{"alpha", fmt(alpha)}});
}

CheckResult check_integral_refinement(const MeanTriple& t, const NormKind& k,
                                      double alpha) {
  return check_integral_refinement(t, k, alpha, integral_of_F(t, k));
}

CheckResult check_t3(const MeanTriple& t, const NormKind& k, double nu) {
  require_range(nu >= 0.25 && nu <= 0.75, "check_t3: nu outside [1/4, 3/4]");
  const double r0 = weight_r0(nu);
  const double lmin = std::min(2.0 - 4.0 * r0, 4.0 * r0 - 1.0);
  const double k_quarter = K_of(t, k, 0.25);
  const double lhs = K_of(t, k, nu) +
                     2.0 * lmin * (0.5 * k_quarter - K_of(t, k, 0.375));
  const double rhs = 2.0 * (1.0 - 2.0 * r0) * k_quarter;
  return make_check_result("check_t3",
                           {"K(nu)+2*lmin*(K(1/4)/2-K(3/8))", "2(1-2r0)K(1/4)"},
                           {lhs, rhs}, {{"nu", fmt(nu)}});
}

CheckResult check_t4(const MeanTriple& t, const NormKind& k) {
  const double integral = integral_of_K(t, k);
  const double refined = 0.125 * K_of(t, k, 0.25) + 0.25 * K_of(t, k, 0.375);
  const double coarse = 0.25 * K_of(t, k, 0.25);
  return make_check_result("check_t4",
                           {"int K", "K(1/4)/8+K(3/8)/4", "K(1/4)/4"},
                           {integral, refined, coarse}, {});
}

CheckResult check_hiai_zhan(const MeanTriple& t, const NormKind& k, double s,
                            double r) {
  require_range(s >= 0.0 && s <= 1.0, "check_hiai_zhan: s outside [0, 1]");
  require_range(r > 0.0, "check_hiai_zhan: r <= 0");
  const double lower = std::pow(gauge_pow(product_spectrum(t, 0.5), r, k), 2.0);
  const double middle = phi_of(t, k, s, r);
  const double upper = gauge_pow(product_spectrum(t, 1.0), r, k) *
                       gauge_pow(product_spectrum(t, 0.0), r, k);
  return make_check_result(
      "check_hiai_zhan",
      {"||| |A^.5 X B^.5|^r |||^2", "phi(s)", "||| |AX|^r ||| * ||| |XB|^r |||"},
      {lower, middle, upper}, {{"s", fmt(s)}, {"r", fmt(r)}});
}

CheckResult check_cs_refinement(const MeanTriple& t, const NormKind& k,
                                double s, double r) {
  require_range(s >= 0.0 && s <= 1.0, "check_cs_refinement: s outside [0, 1]");
  require_range(r > 0.0, "check_cs_refinement: r <= 0");
  const double t0 = weight_t0(s);
  const double lmin = std::min(1.0 - 2.0 * t0, 2.0 * t0);
  const double phi_s = phi_of(t, k, s, r);
  const double phi_0 = phi_of(t, k, 0.0, r);
  const double phi_half = phi_of(t, k, 0.5, r);
  const double gap = 0.5 * (phi_half + phi_0) - phi_of(t, k, 0.25, r);
  const double upper = (1.0 - 2.0 * t0) * phi_0 + 2.0 * t0 * phi_half;
  return make_check_result(
      "check_cs_refinement",
      {"phi(s)", "phi(s)+lmin*gap", "(1-2t0)phi(0)+2t0*phi(1/2)"},
      {phi_s, phi_s + lmin * gap, upper}, {{"s", fmt(s)}, {"r", fmt(r)}});
}

CheckResult check_schur_norm_bound(const Matrix& y, const Matrix& z,
                                   const NormKind& k) {
  if (y.rows() != y.cols()) {
    throw DimensionError("check_schur_norm_bound: Y must be square");
  }
  if (!is_psd(y, 1e-10)) {
    throw NotPSDError("check_schur_norm_bound: Y is not PSD");
  }
  double max_diag = 0.0;
  for (std::size_t i = 0; i < y.rows(); ++i)
    max_diag = std::max(max_diag, y(i, i));
  const double lhs = ui_norm(schur_product(y, z), k);
  const double rhs = max_diag * ui_norm(z, k);
  return make_check_result("check_schur_norm_bound",
                           {"|||Y o Z|||", "max_i y_ii * |||Z|||"}, {lhs, rhs},
                           {{"max_diag", fmt(max_diag)}});
}

ZouCounterexample zou_counterexample() {
  constexpr double nu = 0.42;
  const double x[3] = {1.7006, 0.0, 0.8047};
  const double beta = 1.0 - 2.0 * nu;
  Matrix m(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const double d = x[i] - x[j];
      m(i, j) = std::cosh(beta * d) / (2.0 * nu + beta * std::cosh(d));
    }
  }
  const double det = determinant(m);
  const bool psd = is_psd(m, 1e-8);
  return {std::move(m), det, psd};
}

}  // namespace heron

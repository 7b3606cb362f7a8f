#ifndef HERON_FUNCTIONALS_HPP
#define HERON_FUNCTIONALS_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "heron/means.hpp"
#include "heron/norms.hpp"

namespace heron {

/// One evaluated inequality chain, left to right. passed is true iff
/// every margin chain[i+1] - chain[i] is >= -tau with
/// tau = tolerance_scale * 1e-8 * max(1, max |chain value|).
struct CheckResult {
  std::string name;
  std::vector<std::string> labels;
  std::vector<double> chain;
  std::vector<double> margins;
  bool passed = false;
  std::map<std::string, std::string> params;
};

double check_tolerance(const std::vector<double>& chain,
                       double tolerance_scale = 1.0);

CheckResult make_check_result(std::string name,
                              std::vector<std::string> labels,
                              std::vector<double> chain,
                              std::map<std::string, std::string> params,
                              double tolerance_scale = 1.0);

// Piecewise weights used by the refinement theorems.
double weight_r0(double nu);  // min(nu, 1-nu)
double weight_r2(double nu);  // min(2nu - 1/2, |1 - 2nu|, 3/2 - 2nu)
double weight_t0(double t);   // min(t, 1-t)

struct JensenParams {
  double lambda = 0.5;
  double x1 = 0.0;
  double x2 = 1.0;
};

// --- The functionals F, G, K, phi ------------------------------------

/// F(nu) = 1/2 ||| A^nu X B^{1-nu} + A^{1-nu} X B^nu |||.
double F_of(const MeanTriple& t, const NormKind& k, double nu);

/// G(alpha) = ||| (1-alpha) A^{1/2} X B^{1/2} + alpha (AX+XB)/2 |||.
double G_of(const MeanTriple& t, const NormKind& k, double alpha);

/// K(nu) = ||| A^nu X B^{1-nu} - A^{1-nu} X B^nu |||.
double K_of(const MeanTriple& t, const NormKind& k, double nu);

/// phi(s) = ||| |A^s X B^{1-s}|^r ||| * ||| |A^{1-s} X B^s|^r |||.
double phi_of(const MeanTriple& t, const NormKind& k, double s, double r);

// --- Checkers, one per inequality chain -------------------------------

CheckResult check_t1(const MeanTriple& t, const NormKind& k, double nu,
                     double alpha);
CheckResult check_t1_integral(const MeanTriple& t, const NormKind& k,
                              double alpha);
CheckResult check_t20(const MeanTriple& t, const NormKind& k, double nu,
                      double alpha);
CheckResult check_kantorovich_s2(const MeanTriple& t, double nu, double m,
                                 double big_m);
CheckResult check_t2(const MeanTriple& t, const NormKind& k, double nu);
CheckResult check_t2_integral(const MeanTriple& t, const NormKind& k);
CheckResult check_heinz_diff_classical(const MeanTriple& t, const NormKind& k,
                                       double nu);
CheckResult check_gen_diff(const MeanTriple& t, const NormKind& k,
                           double alpha, double nu);
CheckResult check_power_diff(const MeanTriple& t, const NormKind& k, double r);
CheckResult check_reverse_heinz(const MeanTriple& t, const NormKind& k,
                                double nu);
CheckResult check_convexity_extension(const MeanTriple& t, const NormKind& k,
                                      std::span<const double> grid);
CheckResult check_corollary_sum(const MeanTriple& t, const NormKind& k,
                                double nu, int n_terms,
                                const std::string& branch);
CheckResult check_jensen_bounds(const std::function<double(double)>& f,
                                const JensenParams& p);
CheckResult check_hermite_hadamard_gap(const std::function<double(double)>& f,
                                       double x1, double x2);
CheckResult check_conde(const MeanTriple& t, const NormKind& k, double nu,
                        double alpha);
CheckResult check_integral_refinement(const MeanTriple& t, const NormKind& k,
                                      double alpha);
CheckResult check_t3(const MeanTriple& t, const NormKind& k, double nu);
CheckResult check_t4(const MeanTriple& t, const NormKind& k);
CheckResult check_hiai_zhan(const MeanTriple& t, const NormKind& k, double s,
                            double r);
CheckResult check_cs_refinement(const MeanTriple& t, const NormKind& k,
                                double s, double r);
CheckResult check_schur_norm_bound(const Matrix& y, const Matrix& z,
                                   const NormKind& k);

// Overloads that accept a precomputed integral of F (resp. K) over
// [1/4, 3/4], so a suite can share one quadrature across grid points.
CheckResult check_t1_integral(const MeanTriple& t, const NormKind& k,
                              double alpha, double integral_f);
CheckResult check_integral_refinement(const MeanTriple& t, const NormKind& k,
                                      double alpha, double integral_f);

/// Integral of F (resp. K) over [1/4, 3/4] at tolerance 1e-9.
double integral_of_F(const MeanTriple& t, const NormKind& k);
double integral_of_K(const MeanTriple& t, const NormKind& k);

// --- The Zou counterexample -------------------------------------------

struct ZouCounterexample {
  Matrix matrix;
  double det = 0.0;
  bool psd = false;
};

/// The fixed 3x3 kernel matrix at nu = 0.42, x = (1.7006, 0, 0.8047),
/// with entries cosh((1-2nu)(x_i-x_j)) / (2nu + (1-2nu) cosh(x_i-x_j)).
ZouCounterexample zou_counterexample();

}  // namespace heron

#endif

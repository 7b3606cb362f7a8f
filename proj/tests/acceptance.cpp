// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "heron/rng.hpp"
#include "heron/suite.hpp"
#include "heron/svd.hpp"

using namespace heron;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::printf("criterion %d: %s — %s\n", criterion, ok ? "PASS" : "FAIL",
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

double det_cofactor(const Matrix& a) {
  const std::size_t n = a.rows();
  if (n == 1) return a(0, 0);
  double det = 0.0;
  double sign = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    Matrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = a(r, c);
      }
    }
    det += sign * a(0, j) * det_cofactor(minor);
    sign = -sign;
  }
  return det;
}

SuiteConfig full_config() {
  SuiteConfig cfg;
  cfg.suites = {"all"};
  cfg.dims = {2, 3, 4, 6};
  cfg.trials = 1000;
  cfg.seed = 42;
  cfg.norms = SuiteConfig::default_norms();
  return cfg;
}

void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  const ZouCounterexample z = zou_counterexample();
  const double elapsed = seconds_since(t0);
  const bool entries = std::fabs(z.matrix(0, 1) - 0.8023) <= 5e-5 &&
                       std::fabs(z.matrix(0, 2) - 0.9454) <= 5e-5 &&
                       std::fabs(z.matrix(1, 2) - 0.9560) <= 5e-5;
  const bool det_ok = std::fabs(z.det - (-0.0012)) <= 5e-4;
  const bool ok = entries && det_ok && !z.psd && elapsed < 1.0;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "counterexample kernel: det=%.6f, psd=%s, %.3fs", z.det,
                z.psd ? "true" : "false", elapsed);
  report(1, ok, buf);
}

std::string run_full_suite_json(double* elapsed, bool* passed,
                                double* worst_margin) {
  const auto t0 = std::chrono::steady_clock::now();
  const CheckReport r = run_suite(full_config());
  *elapsed = seconds_since(t0);
  *passed = r.all_passed();
  *worst_margin = 0.0;
  for (const SuiteSummary& s : r.suites)
    *worst_margin = std::min(*worst_margin, s.worst_margin);
  return r.to_json(false).dump(2);
}

std::string g_first_report;

void criterion_2() {
  double elapsed = 0.0;
  double worst = 0.0;
  bool passed = false;
  g_first_report = run_full_suite_json(&elapsed, &passed, &worst);
  // chains are normalized by max(1, max |chain|), so the scale-adjusted
  // margin floor is the plain tolerance
  const bool ok = passed && elapsed < 300.0;
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "dims {2,3,4,6} x 1000 trials x 6 norms: all suites failed=0, "
                "worst margin %.3e, %.1fs",
                worst, elapsed);
  report(2, ok, buf);
}

void criterion_3() {
  bool ok = true;
  for (std::uint64_t seed = 0; seed < 500 && ok; ++seed) {
    Rng rng(mix_seed(9001, seed));
    const std::size_t n = 1 + static_cast<std::size_t>(seed % 6);
    const Matrix x = random_gaussian_matrix(n, n, rng);
    const std::vector<double> s = svd(x).values;
    const SymEig e = sym_eig(matmul(transpose(x), x));
    for (std::size_t i = 0; i < n; ++i) {
      const double oracle = std::sqrt(std::max(0.0, e.eigenvalues[n - 1 - i]));
      if (std::fabs(s[i] - oracle) > 1e-9 * std::max(1.0, oracle)) ok = false;
    }
  }
  bool det_ok = true;
  for (std::uint64_t seed = 0; seed < 500 && det_ok; ++seed) {
    Rng rng(mix_seed(9002, seed));
    const std::size_t n = 1 + static_cast<std::size_t>(seed % 4);
    const Matrix a = random_gaussian_matrix(n, n, rng);
    const double oracle = det_cofactor(a);
    if (std::fabs(determinant(a) - oracle) >
        1e-10 * std::max(1.0, std::fabs(oracle))) {
      det_ok = false;
    }
  }
  report(3, ok && det_ok,
         "SVD vs eig(X^T X) oracle (500 cases, n<=6) and LU vs cofactor "
         "determinant (500 cases, n<=4)");
}

void criterion_4() {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(4242);
  bool ok = true;
  for (int i = 0; i < 100000 && ok; ++i) {
    const double a = rng.uniform(1e-3, 10.0);
    const double b = rng.uniform(1e-3, 10.0);
    const double nu = rng.uniform(0.0, 1.0);
    const double tol = 1e-12 * (a + b);
    const double geo = std::sqrt(a * b);
    const double ari = 0.5 * (a + b);
    const double f = heron_scalar(a, b, nu);
    const double h = heinz_scalar(a, b, nu);
    const double w = (2.0 * nu - 1.0) * (2.0 * nu - 1.0);
    if (f < geo - tol || f > ari + tol) ok = false;
    if (h < geo - tol || h > ari + tol) ok = false;
    if (h > heron_scalar(a, b, w) + tol) ok = false;
    if (h > std::pow(kantorovich_factor(a, b), 1.0 - nu) * f + tol) ok = false;
  }
  const double elapsed = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "1e5 scalar chains (geometric/Heron/Heinz/arithmetic, Bhatia, "
                "Kantorovich), %.2fs",
                elapsed);
  report(4, ok && elapsed < 5.0, buf);
}

void criterion_5() {
  const NormKind k = NormKind::schatten(2.0);
  bool ok = true;
  for (std::uint64_t trial = 0; trial < 100 && ok; ++trial) {
    const int dim = 2 + static_cast<int>(trial % 4);  // 2..5
    const MeanTriple t =
        make_random_triple(dim, 0.5, 2.0, mix_seed(5005, trial));
    std::vector<double> f(33), kk(33), ph(33);
    for (int i = 0; i < 33; ++i) {
      const double nu = i / 32.0;
      f[static_cast<std::size_t>(i)] = F_of(t, k, nu);
      kk[static_cast<std::size_t>(i)] = K_of(t, k, nu);
      ph[static_cast<std::size_t>(i)] = phi_of(t, k, nu, 1.0);
    }
    const double tau_f = 1e-8 * std::max(1.0, f.back());
    const double tau_k = 1e-8 * std::max(1.0, kk.front());
    const double tau_p = 1e-8 * std::max(1.0, ph.front());
    for (int i = 0; i < 33; ++i) {
      const std::size_t j = static_cast<std::size_t>(i);
      if (std::fabs(f[j] - f[32 - j]) > tau_f) ok = false;
      if (std::fabs(kk[j] - kk[32 - j]) > tau_k) ok = false;
      if (std::fabs(ph[j] - ph[32 - j]) > tau_p) ok = false;
    }
    for (std::size_t i = 0; i + 2 < 33; i += 2) {
      if (f[i + 1] > 0.5 * (f[i] + f[i + 2]) + tau_f) ok = false;
      if (kk[i + 1] > 0.5 * (kk[i] + kk[i + 2]) + tau_k) ok = false;
      if (ph[i + 1] > 0.5 * (ph[i] + ph[i + 2]) + tau_p) ok = false;
    }
  }
  report(5, ok,
         "F/K/phi midpoint convexity and symmetry on 33-point grids over 100 "
         "random triples");
}

void criterion_6() {
  Rng rng(6006);
  bool ok = true;
  for (int i = 0; i < 500 && ok; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 5);  // up to 6
    std::vector<double> mu(n);
    for (double& v : mu) v = rng.uniform(0.05, 10.0);
    const double r = rng.uniform(0.0, 1.0);
    if (!is_psd(loewner_matrix(mu, r), 1e-10)) ok = false;
  }
  report(6, ok, "500 random Loewner matrices pass is_psd at tol 1e-10");
}

void criterion_7() {
  double elapsed = 0.0;
  double worst = 0.0;
  bool passed = false;
  const std::string second =
      run_full_suite_json(&elapsed, &passed, &worst);
  const bool ok = passed && second == g_first_report;
  char buf[120];
  std::snprintf(buf, sizeof(buf),
                "rerun of the full-suite config is byte-identical excluding "
                "wall time (%.1fs)",
                elapsed);
  report(7, ok, buf);
}

void criterion_8() {
  const CheckResult r = check_jensen_bounds(
      [](double x) { return x * x; }, {0.25, 0.0, 1.0});
  const bool ok = r.chain.size() == 3 &&
                  std::fabs(r.chain[0] - 0.125) <= 1e-12 &&
                  std::fabs(r.chain[1] - 0.1875) <= 1e-12 &&
                  std::fabs(r.chain[2] - 0.375) <= 1e-12 && r.passed;
  report(8, ok,
         "Jensen bounds for x^2 at lambda=1/4 give the chain "
         "(0.125, 0.1875, 0.375)");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  if (g_failures == 0) {
    std::printf("acceptance: all 8 criteria passed\n");
  } else {
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
  }
  return g_failures == 0 ? 0 : 1;
}

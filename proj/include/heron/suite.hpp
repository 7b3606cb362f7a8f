#ifndef HERON_SUITE_HPP
#define HERON_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "heron/functionals.hpp"

namespace heron {

inline constexpr const char* kVersion = "0.1.0";

struct SuiteConfig {
  std::vector<std::string> suites{"all"};
  std::vector<int> dims{2, 3};
  int trials = 50;
  std::uint64_t seed = 42;
  std::vector<NormKind> norms = default_norms();
  // Empty grid = the per-suite default grid. A user-supplied grid is
  // validated against every selected suite's parameter domain.
  std::vector<double> nu_grid;
  std::vector<double> alpha_grid;
  std::vector<double> r_grid;
  std::vector<double> s_grid;
  double spectrum_m = 0.5;
  double spectrum_M = 2.0;
  double tolerance_scale = 1.0;

  static std::vector<NormKind> default_norms();
  static SuiteConfig from_json(const nlohmann::json& j);
  nlohmann::ordered_json to_json() const;
};

struct SuiteSummary {
  std::string name;
  std::int64_t total = 0;
  std::int64_t passed = 0;
  std::int64_t failed = 0;
  double worst_margin = 0.0;
  std::map<std::string, std::string> worst_case_params;
};

struct CheckReport {
  SuiteConfig config;
  std::vector<SuiteSummary> suites;
  std::vector<CheckResult> failures;
  std::string version = kVersion;
  double wall_time_s = 0.0;

  bool all_passed() const;
  nlohmann::ordered_json to_json(bool include_wall_time = true) const;
};

/// All registered suite names, in execution order.
std::vector<std::string> suite_names();

/// Validates the config (ConfigError on problems) and runs the selected
/// suites over the seeded instance cross-product.
CheckReport run_suite(const SuiteConfig& config);

/// Deterministic (A, X, B) instance for a given dimension and seed, with
/// the spectra of A and B inside [m, M].
MeanTriple make_random_triple(int dim, double m, double big_m,
                              std::uint64_t seed);

/// Writes a `param,value` CSV of F/G/K/phi over the grid (17 significant
/// digits, LF line endings). phi uses exponent r.
void emit_sweep(const MeanTriple& t, const NormKind& k,
                const std::string& functional, std::span<const double> grid,
                double r, const std::string& out_path);

}  // namespace heron

#endif

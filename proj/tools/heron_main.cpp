#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "heron/suite.hpp"

namespace {

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << text;
}

std::string report_csv(const heron::CheckReport& report) {
  std::ostringstream out;
  out << "suite,total,passed,failed,worst_margin\n";
  char buf[40];
  for (const heron::SuiteSummary& s : report.suites) {
    std::snprintf(buf, sizeof(buf), "%.17g", s.worst_margin);
    out << s.name << ',' << s.total << ',' << s.passed << ',' << s.failed
        << ',' << buf << '\n';
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verifier for Heron/Heinz mean norm inequalities"};
  app.require_subcommand(1);

  // --- check ------------------------------------------------------------
  auto* check = app.add_subcommand("check", "Run inequality suites");
  std::string config_path;
  std::vector<std::string> suites;
  std::vector<int> dims;
  int trials = -1;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::vector<std::string> norms;
  std::string out_path;
  std::string format = "json";
  double tolerance_scale = -1.0;
  check->add_option("--config", config_path, "JSON config file");
  check->add_option("--suite", suites, "Suite name (repeatable; default all)");
  check->add_option("--dims", dims, "Matrix dimensions");
  check->add_option("--trials", trials, "Random triples per dimension");
  check->add_option("--seed", seed, "Master RNG seed")
      ->each([&](const std::string&) { seed_set = true; });
  check->add_option("--norm", norms,
                    "Norm, e.g. operator, trace, schatten:2, kyfan:2 "
                    "(repeatable)");
  check->add_option("--out", out_path, "Output path (default stdout)");
  check->add_option("--format", format, "Report format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  check->add_option("--tolerance-scale", tolerance_scale,
                    "Multiplier on the pass/fail tolerance");

  // --- sweep ------------------------------------------------------------
  auto* sweep = app.add_subcommand(
      "sweep", "Write a param,value CSV of a functional over a grid");
  int sweep_dim = 3;
  std::uint64_t sweep_seed = 42;
  double sweep_m = 0.5;
  double sweep_big_m = 2.0;
  std::string sweep_norm = "schatten:2";
  std::string functional = "F";
  double sweep_r = 1.0;
  double grid_lo = 0.0;
  double grid_hi = 1.0;
  int grid_points = 33;
  std::string sweep_out;
  sweep->add_option("--dim", sweep_dim, "Matrix dimension")
      ->check(CLI::Range(1, 16));
  sweep->add_option("--seed", sweep_seed, "Instance seed");
  sweep->add_option("--m", sweep_m, "Lower spectrum bound for A and B");
  sweep->add_option("--M", sweep_big_m, "Upper spectrum bound for A and B");
  sweep->add_option("--norm", sweep_norm, "Norm selector");
  sweep->add_option("--functional", functional, "One of F, G, K, phi")
      ->check(CLI::IsMember({"F", "G", "K", "phi"}));
  sweep->add_option("--r", sweep_r, "Exponent r for phi");
  sweep->add_option("--grid-lo", grid_lo, "Grid start");
  sweep->add_option("--grid-hi", grid_hi, "Grid end");
  sweep->add_option("--grid-points", grid_points, "Grid size")
      ->check(CLI::Range(2, 100000));
  sweep->add_option("--out", sweep_out, "CSV output path")->required();

  // --- zou --------------------------------------------------------------
  auto* zou = app.add_subcommand(
      "zou", "Print the 3x3 counterexample kernel, its determinant and "
             "positivity verdict");

  // --- version ----------------------------------------------------------
  auto* version = app.add_subcommand("version", "Print the version");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Usage errors are configuration errors per the exit-code contract;
    // --help and --version still exit 0.
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) {
      heron::SuiteConfig cfg;
      if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) {
          std::cerr << "error: cannot read config " << config_path << "\n";
          return 2;
        }
        nlohmann::json j;
        try {
          in >> j;
        } catch (const nlohmann::json::exception& e) {
          std::cerr << "error: invalid JSON in " << config_path << ": "
                    << e.what() << "\n";
          return 2;
        }
        cfg = heron::SuiteConfig::from_json(j);
      }
      if (!suites.empty()) cfg.suites = suites;
      if (!dims.empty()) cfg.dims = dims;
      if (trials >= 0) cfg.trials = trials;
      if (seed_set) cfg.seed = seed;
      if (!norms.empty()) {
        cfg.norms.clear();
        for (const std::string& n : norms) {
          cfg.norms.push_back(heron::NormKind::parse(n));
        }
      }
      if (tolerance_scale > 0.0) cfg.tolerance_scale = tolerance_scale;

      const heron::CheckReport report = heron::run_suite(cfg);
      if (format == "csv") {
        write_text(out_path, report_csv(report));
      } else {
        write_text(out_path, report.to_json().dump(2) + "\n");
      }
      return report.all_passed() ? 0 : 1;
    }

    if (sweep->parsed()) {
      const heron::MeanTriple triple =
          heron::make_random_triple(sweep_dim, sweep_m, sweep_big_m, sweep_seed);
      const heron::NormKind kind = heron::NormKind::parse(sweep_norm);
      std::vector<double> grid(static_cast<std::size_t>(grid_points));
      for (int i = 0; i < grid_points; ++i) {
        grid[static_cast<std::size_t>(i)] =
            grid_lo + (grid_hi - grid_lo) * static_cast<double>(i) /
                          static_cast<double>(grid_points - 1);
      }
      heron::emit_sweep(triple, kind, functional, grid, sweep_r, sweep_out);
      return 0;
    }

    if (zou->parsed()) {
      const heron::ZouCounterexample z = heron::zou_counterexample();
      std::printf("matrix:\n");
      for (std::size_t i = 0; i < 3; ++i) {
        std::printf("  % .10f % .10f % .10f\n", z.matrix(i, 0), z.matrix(i, 1),
                    z.matrix(i, 2));
      }
      std::printf("determinant: %.10f\n", z.det);
      std::printf("psd: %s\n", z.psd ? "true" : "false");
      return 0;
    }

    if (version->parsed()) {
      std::printf("%s\n", heron::kVersion);
      return 0;
    }
  } catch (const heron::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

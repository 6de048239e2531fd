#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "fracframes/cli/config.hpp"

namespace fracframes::cli {

inline constexpr const char* kVersion = "0.3.0";

struct ConvergenceRow {
  int n = 0;
  double rhs_linf_error = 0.0;
  double sol_linf_error = 0.0;
  double coeff_inf_norm = 0.0;
  int kept_rank = 0;
  double wall_ms = 0.0;
};

struct TimeRow {
  std::string method;
  double dt = 0.0;
  double max_rel_error = 0.0;
};

/// A dense table with named columns (heat tail or variable-s profile).
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

struct RunOptions {
  /// Output directory; nothing is written when empty.
  std::optional<std::filesystem::path> out_dir;
  /// Progress lines; silent when null.
  std::ostream* log = nullptr;
};

struct RunResult {
  std::vector<ConvergenceRow> convergence;
  std::vector<TimeRow> time;
  std::size_t n_points = 0;
  /// Stationary problems: coefficients at the largest N.
  Eigen::VectorXd coeffs;
  /// Time-dependent problems: l-inf error of the initial-state expansion at the largest N.
  double init_linf_error = 0.0;
  Table tail;
  nlohmann::json summary;
};

/// Runs a resolved config and writes <name>_convergence.csv, <name>_time.csv
/// (time-dependent), further tables and summary.json into out_dir. Every CSV
/// row is flushed as soon as it is computed. On a numerical failure the
/// failing (N, dt) is recorded in summary.json and the error is rethrown.
RunResult run(const ExperimentConfig& cfg, const RunOptions& opts = {});

/// Resolved grid, space and time block, without computing anything.
std::string dry_run_report(const ExperimentConfig& cfg);

/// Least-squares slope of log|y| against log x over the finite entries.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace fracframes::cli

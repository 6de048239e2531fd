#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fracframes/basis1d.hpp"
#include "fracframes/frame.hpp"

namespace fracframes::cli {

/// A scalar c0 + c1 * s, written as "0.25", "1/3", "s", "-s", "2/3 s" or "-1/2*s".
struct Param {
  double constant = 0.0;
  double s_coeff = 0.0;
  std::string text;

  [[nodiscard]] double at(double s) const noexcept { return constant + s_coeff * s; }
  [[nodiscard]] bool symbolic() const noexcept { return s_coeff != 0.0; }
  static Param parse(const std::string& text);
  static Param value(double v);
};

enum class Problem { Gaussian, Column, Samples, Heat, VariableS };

std::string to_string(Problem p);

/// Replicated over every interval (1D) or every disk radius (2D).
struct FamilySpec {
  std::string kind;  // weighted | extended
  Param a;
  Param s;
  int offset = 0;
};

struct TermSpec {
  Param lambda;
  Param t;
};

struct ExperimentConfig {
  std::string name;
  Problem problem = Problem::Gaussian;
  int dim = 1;
  double s = 0.5;
  std::vector<TermSpec> op;
  std::vector<FamilySpec> families;

  std::vector<basis1d::Interval> intervals;
  std::vector<basis1d::Interval> pads;
  std::vector<double> disks;
  std::vector<double> radial_breaks;
  int n_angles = 30;
  int mode_m = 0;
  int mode_j = 1;

  int pts_per_segment = 501;
  double eps_offset = 1e-2;
  std::vector<int> n_schedule;
  std::optional<double> svd_eps;
  bool record_timing = true;

  int rhs_column = 0;
  std::string rhs_file;
  std::vector<std::vector<double>> eval_points;
  int eval_samples = 201;

  std::vector<std::string> methods;
  std::vector<double> dts;
  double t_end = 1.0;
  std::string tail_method;
  double tail_dt = 1e-2;
  double tail_x_max = 1e3;
  int tail_samples = 2001;

  double s_start = 0.5;
  double s_rate = -1.0 / 3.0;
  std::vector<double> compare_s;
  std::vector<double> slope_window{5.0, 20.0};

  [[nodiscard]] bool time_dependent() const noexcept {
    return problem == Problem::Heat || problem == Problem::VariableS;
  }
  [[nodiscard]] int max_n() const { return n_schedule.empty() ? 0 : n_schedule.back(); }

  /// Cross-field checks; throws ConfigError naming the offending field.
  void validate() const;
};

/// "key=value" with the value read as YAML, so lists and fractions work.
struct Override {
  std::string key;
  std::string value;
  static Override parse(const std::string& text);
};

std::vector<std::string> experiment_names();

/// Builtin experiment at its full-size defaults, then overrides.
ExperimentConfig builtin_config(const std::string& name, const std::vector<Override>& overrides = {});

/// Config file; relative rhs_file paths resolve against the file's directory.
ExperimentConfig load_config_file(const std::filesystem::path& path, const std::vector<Override>& overrides = {});

ExperimentConfig parse_config_text(const std::string& yaml_text, const std::vector<Override>& overrides = {});

/// The YAML text of a builtin experiment.
std::string builtin_yaml(const std::string& name);

nlohmann::json to_json(const ExperimentConfig& cfg);

/// Families, operator and grid for exponent s (cfg.s unless given).
std::vector<frame::BasisFamily> build_families(const ExperimentConfig& cfg, std::optional<double> s = std::nullopt);
frame::SumSpace build_space(const ExperimentConfig& cfg, int n_columns, std::optional<double> s = std::nullopt);
frame::OperatorSpec build_operator(const ExperimentConfig& cfg, std::optional<double> s = std::nullopt);
frame::Points build_grid(const ExperimentConfig& cfg);

}  // namespace fracframes::cli

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#ifdef FRACFRAMES_HAVE_OPENMP
#include <omp.h>
#endif

#include "fracframes/cli/config.hpp"
#include "fracframes/cli/runner.hpp"
#include "fracframes/error.hpp"

namespace {

using namespace fracframes;

int set_threads(int requested) {
  int n = requested;
  if (n <= 0) {
    if (const char* env = std::getenv("FRACFRAMES_THREADS")) {
      try {
        n = std::stoi(env);
      } catch (const std::exception&) {
        throw ConfigError(std::string("FRACFRAMES_THREADS: not an integer: '") + env + "'");
      }
      if (n <= 0) throw ConfigError("FRACFRAMES_THREADS: must be positive");
    }
  }
#ifdef FRACFRAMES_HAVE_OPENMP
  if (n > 0) omp_set_num_threads(n);
  return n > 0 ? n : omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frame spectral solver for fractional PDEs on unbounded domains"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", cli::kVersion);

  std::optional<double> svd_eps;
  int threads = 0;
  bool no_timing = false;
  bool quiet = false;
  app.add_option("--svd-eps", svd_eps, "Absolute singular value cutoff (default: 1e-14 * sigma_max)")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", threads, "Worker threads (fallback: FRACFRAMES_THREADS)")->check(CLI::PositiveNumber);
  app.add_flag("--no-timing", no_timing, "Write wall_ms as 0 for byte-identical outputs");
  app.add_flag("-q,--quiet", quiet, "No progress output");

  std::string config_path;
  std::string experiment;
  std::string out_dir = "results";
  std::vector<std::string> overrides;
  bool dry_run = false;

  auto* solve = app.add_subcommand("solve", "Solve a problem described by a config file");
  solve->add_option("--config", config_path, "YAML config file")->required();
  solve->add_option("--out", out_dir, "Output directory")->capture_default_str();
  solve->add_option("--override", overrides, "key=value, value parsed as YAML");
  solve->add_flag("--dry-run", dry_run, "Validate and print the resolved setup only");

  auto* exp = app.add_subcommand("experiment", "Run a builtin experiment");
  exp->add_option("name", experiment, "gaussian | mult-exponents | gaussian2d | frac-heat | variable-s")->required();
  exp->add_option("--override", overrides, "key=value, value parsed as YAML");
  exp->add_option("--out", out_dir, "Output directory")->capture_default_str();
  exp->add_flag("--dry-run", dry_run, "Validate and print the resolved setup only");

  auto* list = app.add_subcommand("list", "List builtin experiments");
  auto* show = app.add_subcommand("show", "Print the config of a builtin experiment");
  std::string show_name;
  show->add_option("name", show_name)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (list->parsed()) {
      for (const auto& n : cli::experiment_names()) std::cout << n << "\n";
      return 0;
    }
    if (show->parsed()) {
      std::cout << cli::builtin_yaml(show_name);
      return 0;
    }
    std::vector<cli::Override> ov;
    for (const auto& o : overrides) ov.push_back(cli::Override::parse(o));
    if (svd_eps) ov.push_back({"svd_eps", std::to_string(*svd_eps)});
    if (no_timing) ov.push_back({"record_timing", "false"});

    const cli::ExperimentConfig cfg =
        solve->parsed() ? cli::load_config_file(config_path, ov) : cli::builtin_config(experiment, ov);
    const int n_threads = set_threads(threads);
    if (dry_run) {
      std::cout << cli::dry_run_report(cfg) << "threads: " << n_threads << "\n";
      return 0;
    }
    cli::RunOptions opts;
    opts.out_dir = out_dir;
    opts.log = quiet ? nullptr : &std::cerr;
    (void)cli::run(cfg, opts);
    if (!quiet) std::cerr << "wrote results to " << out_dir << "\n";
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

#include "fracframes/cli/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include "fracframes/error.hpp"
#include "fracframes/solver.hpp"
#include "fracframes/timestep.hpp"

namespace fracframes::cli {

namespace {

using Clock = std::chrono::steady_clock;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_short(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string fmt_ms(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

/// CSV file that flushes after every row.
class CsvWriter {
 public:
  CsvWriter() = default;
  CsvWriter(const std::optional<std::filesystem::path>& dir, const std::string& file,
            const std::vector<std::string>& header) {
    if (!dir) return;
    path_ = *dir / file;
    out_.open(path_);
    if (!out_) throw Error("cannot write " + path_.string());
    row(header);
  }
  void row(const std::vector<std::string>& cells) {
    if (!out_.is_open()) return;
    for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << cells[i];
    out_ << '\n';
    out_.flush();
  }

 private:
  std::filesystem::path path_;
  std::ofstream out_;
};

struct Logger {
  std::ostream* os;
  template <class... T>
  void operator()(const T&... parts) const {
    if (!os) return;
    ((*os) << ... << parts) << std::endl;
  }
};

std::optional<double> eps_of(const ExperimentConfig& cfg) { return cfg.svd_eps; }

double gaussian_term(int dim, double t, double x, double y) {
  if (t == 0.0) return std::exp(-x * x - y * y);
  return dim == 1 ? solver::gaussian_frac_lap_1d(t, x) : solver::gaussian_frac_lap_2d(t, x, y);
}

double max_abs(const Eigen::VectorXd& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

/// u at each point, NaN where a family is singular.
std::vector<double> evaluate_safe(const frame::SumSpace& space, const Eigen::VectorXd& coeffs,
                                  const frame::Points& pts) {
  const frame::SpaceImage img = frame::identity_image(space);
  std::vector<double> out(pts.size(), kNaN);
  try {
    const Eigen::VectorXd u = frame::assemble_matrix(img, pts) * coeffs;
    for (std::size_t i = 0; i < pts.size(); ++i) out[i] = u(static_cast<Eigen::Index>(i));
    return out;
  } catch (const SingularPointError&) {
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const frame::Points one = pts.dim == 1 ? frame::Points::line({pts.x[i]}) : frame::Points::plane({pts.x[i]}, {pts.y[i]});
    try {
      out[i] = (frame::assemble_matrix(img, one) * coeffs)(0);
    } catch (const SingularPointError&) {
    }
  }
  return out;
}

Eigen::VectorXd read_samples(const ExperimentConfig& cfg, const frame::Points& grid) {
  std::ifstream in(cfg.rhs_file);
  if (!in) throw ConfigError("rhs_file: cannot open " + cfg.rhs_file);
  std::string line;
  std::getline(in, line);
  const std::size_t want = cfg.dim + 1;
  Eigen::VectorXd f(static_cast<Eigen::Index>(grid.size()));
  std::size_t i = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(std::stod(cell));
    const std::string where = "rhs_file line " + std::to_string(i + 2);
    if (cells.size() != want) throw ConfigError(where + ": expected " + std::to_string(want) + " columns");
    if (i >= grid.size()) throw ConfigError("rhs_file: more rows than collocation points");
    const double dx = std::abs(cells[0] - grid.x[i]);
    const double dy = cfg.dim == 2 ? std::abs(cells[1] - grid.y[i]) : 0.0;
    if (dx > 1e-9 * (1.0 + std::abs(grid.x[i])) || dy > 1e-9 * (1.0 + (cfg.dim == 2 ? std::abs(grid.y[i]) : 0.0))) {
      throw ConfigError(where + ": point does not match collocation point " + std::to_string(i));
    }
    f(static_cast<Eigen::Index>(i)) = cells.back();
    ++i;
  }
  if (i != grid.size()) {
    throw ConfigError("rhs_file: " + std::to_string(i) + " rows for " + std::to_string(grid.size()) +
                      " collocation points");
  }
  return f;
}

frame::Points eval_points(const ExperimentConfig& cfg, const frame::Points& grid) {
  if (!cfg.eval_points.empty()) {
    std::vector<double> xs, ys;
    for (const auto& p : cfg.eval_points) {
      xs.push_back(p[0]);
      if (cfg.dim == 2) ys.push_back(p[1]);
    }
    return cfg.dim == 1 ? frame::Points::line(xs) : frame::Points::plane(xs, ys);
  }
  // Cell midpoints of a uniform partition, along the x axis in 2D.
  double lo = 0.0, hi = 0.0;
  if (cfg.dim == 1) {
    lo = *std::min_element(grid.x.begin(), grid.x.end());
    hi = *std::max_element(grid.x.begin(), grid.x.end());
  } else {
    hi = cfg.radial_breaks.back();
  }
  std::vector<double> xs;
  const double h = (hi - lo) / cfg.eval_samples;
  for (int k = 0; k < cfg.eval_samples; ++k) xs.push_back(lo + (k + 0.5) * h);
  return cfg.dim == 1 ? frame::Points::line(xs) : frame::Points::plane(xs, std::vector<double>(xs.size(), 0.0));
}

nlohmann::json base_summary(const ExperimentConfig& cfg, std::size_t n_points) {
  nlohmann::json s;
  s["library"] = "fracframes";
  s["version"] = kVersion;
  s["config"] = to_json(cfg);
  s["collocation_points"] = n_points;
  return s;
}

void write_summary(const RunOptions& opts, const nlohmann::json& s) {
  if (!opts.out_dir) return;
  std::ofstream out(*opts.out_dir / "summary.json");
  out << s.dump(2) << '\n';
}

void add_convergence(RunResult& res, CsvWriter& csv, const ConvergenceRow& r) {
  res.convergence.push_back(r);
  csv.row({std::to_string(r.n), fmt(r.rhs_linf_error), fmt(r.sol_linf_error), fmt(r.coeff_inf_norm),
           std::to_string(r.kept_rank), fmt_ms(r.wall_ms)});
}

const std::vector<std::string> kConvergenceHeader = {"N",  "rhs_linf_error", "sol_linf_error", "coeff_inf_norm",
                                                     "kept_rank", "wall_ms"};

void run_stationary(const ExperimentConfig& cfg, const RunOptions& opts, RunResult& res, nlohmann::json& summary) {
  const Logger log{opts.log};
  const frame::Points grid = build_grid(cfg);
  res.n_points = grid.size();
  const int n_max = cfg.max_n();
  const frame::SumSpace space = build_space(cfg, n_max);
  const frame::OperatorSpec op = build_operator(cfg);
  log(cfg.name, ": ", grid.size(), " collocation points, ", n_max, " columns, operator ", op.describe());

  const auto t0 = Clock::now();
  const Eigen::MatrixXd XL = frame::assemble_matrix(frame::operator_image(space, op), grid);
  const Eigen::MatrixXd XS = frame::assemble_matrix(frame::identity_image(space), grid);
  summary["assembly_ms"] = cfg.record_timing ? ms_since(t0) : 0.0;
  log("assembled in ", fmt_ms(ms_since(t0)), " ms");

  Eigen::VectorXd f(static_cast<Eigen::Index>(grid.size()));
  Eigen::VectorXd u_exact;
  std::function<double(double, double)> exact;
  switch (cfg.problem) {
    case Problem::Gaussian: {
      for (const auto& term : op.terms) {
        if (!(term.t >= 0.0 && term.t < 1.0)) throw ConfigError("operator: the gaussian problem needs 0 <= t < 1");
      }
      exact = [](double x, double y) { return std::exp(-x * x - y * y); };
      f = solver::sample(
          [&](double x, double y) {
            double v = 0.0;
            for (const auto& term : op.terms) v += term.lambda * gaussian_term(cfg.dim, term.t, x, y);
            return v;
          },
          grid);
      u_exact = solver::sample(exact, grid);
      break;
    }
    case Problem::Column:
      f = XL.col(cfg.rhs_column);
      u_exact = XS.col(cfg.rhs_column);
      break;
    case Problem::Samples:
      f = read_samples(cfg, grid);
      break;
    default:
      throw Error("run_stationary: not a stationary problem");
  }

  CsvWriter csv(opts.out_dir, cfg.name + "_convergence.csv", kConvergenceHeader);
  solver::Solution last;
  for (int n : cfg.n_schedule) {
    try {
      const auto t1 = Clock::now();
      const frame::LsSystem system(XL.leftCols(n));
      last = solver::solve_with(system, space.truncated(n), f, eps_of(cfg));
      ConvergenceRow row;
      row.n = n;
      row.rhs_linf_error = last.diagnostics.rhs_linf_error;
      row.sol_linf_error = u_exact.size() ? max_abs(XS.leftCols(n) * last.coeffs - u_exact) : kNaN;
      row.coeff_inf_norm = last.diagnostics.coeff_inf_norm;
      row.kept_rank = last.diagnostics.kept_rank;
      row.wall_ms = cfg.record_timing ? ms_since(t1) : 0.0;
      add_convergence(res, csv, row);
      log("N=", n, " rhs ", fmt(row.rhs_linf_error), " sol ", fmt(row.sol_linf_error), " |c| ",
          fmt(row.coeff_inf_norm), " rank ", row.kept_rank);
    } catch (const Error& e) {
      summary["failure"] = {{"N", n}, {"message", e.what()}};
      throw;
    }
  }
  res.coeffs = last.coeffs;

  CsvWriter coeffs(opts.out_dir, cfg.name + "_coefficients.csv", {"index", "family", "degree", "coeff"});
  for (int c = 0; c < last.space.size(); ++c) {
    const auto& col = last.space.columns()[c];
    coeffs.row({std::to_string(c), "\"" + last.space.families()[col.family].describe() + "\"",
                std::to_string(col.degree), fmt(last.coeffs(c))});
  }

  const frame::Points ev = eval_points(cfg, grid);
  const std::vector<double> u = evaluate_safe(last.space, last.coeffs, ev);
  CsvWriter table(opts.out_dir, cfg.name + "_evaluation.csv", {"x", "y", "u", "exact", "abs_error"});
  for (std::size_t i = 0; i < ev.size(); ++i) {
    const double y = cfg.dim == 2 ? ev.y[i] : 0.0;
    const double ex = exact ? exact(ev.x[i], y) : kNaN;
    table.row({fmt(ev.x[i]), fmt(y), fmt(u[i]), fmt(ex), fmt(std::abs(u[i] - ex))});
  }

  double best_rhs = kNaN, best_sol = kNaN;
  for (const auto& r : res.convergence) {
    if (!(r.rhs_linf_error >= best_rhs)) best_rhs = r.rhs_linf_error;
    if (!(r.sol_linf_error >= best_sol)) best_sol = r.sol_linf_error;
  }
  summary["best_rhs_linf_error"] = best_rhs;
  summary["best_sol_linf_error"] = best_sol;
}

double heat_exact(double x, double t) { return (1.0 + t) / (x * x + (1.0 + t) * (1.0 + t)); }

Eigen::VectorXd heat_initial(const frame::Points& grid) {
  return solver::sample([](double x, double) { return 1.0 / (1.0 + x * x); }, grid);
}

/// Initial-state expansions over the N schedule, as convergence rows.
Eigen::VectorXd expand_initial(const ExperimentConfig& cfg, const RunOptions& opts, const Eigen::MatrixXd& X,
                               const Eigen::VectorXd& u0, RunResult& res) {
  CsvWriter csv(opts.out_dir, cfg.name + "_convergence.csv", kConvergenceHeader);
  Eigen::VectorXd coeffs;
  for (int n : cfg.n_schedule) {
    const auto t1 = Clock::now();
    const frame::LsSystem system(X.leftCols(n));
    const frame::TsvdReport rep = system.solve(u0, eps_of(cfg));
    const double err = max_abs(X.leftCols(n) * rep.coeffs - u0);
    add_convergence(res, csv, {n, err, err, rep.coeff_inf_norm, rep.kept_rank, cfg.record_timing ? ms_since(t1) : 0.0});
    coeffs = rep.coeffs;
  }
  res.init_linf_error = res.convergence.back().sol_linf_error;
  return coeffs;
}

std::vector<double> tail_grid(double x_max, int n) {
  // Symmetric cell midpoints, so no sample lands on an interval endpoint.
  std::vector<double> xs;
  const double h = 2.0 * x_max / n;
  for (int k = 0; k < n; ++k) xs.push_back(-x_max + (k + 0.5) * h);
  return xs;
}

void run_heat(const ExperimentConfig& cfg, const RunOptions& opts, RunResult& res, nlohmann::json& summary) {
  const Logger log{opts.log};
  const frame::Points grid = build_grid(cfg);
  res.n_points = grid.size();
  const int n = cfg.max_n();
  const frame::SumSpace space = build_space(cfg, n);
  const auto t0 = Clock::now();
  const Eigen::MatrixXd X = frame::assemble_matrix(frame::identity_image(space), grid);
  const Eigen::MatrixXd Xs = frame::assemble_matrix(frame::operator_image(space, build_operator(cfg)), grid);
  summary["assembly_ms"] = cfg.record_timing ? ms_since(t0) : 0.0;
  log(cfg.name, ": ", grid.size(), " collocation points, ", n, " columns");

  const Eigen::VectorXd u0 = heat_initial(grid);
  const Eigen::VectorXd c0 = expand_initial(cfg, opts, X, u0, res);
  summary["init_linf_error"] = res.init_linf_error;
  log("initial expansion error ", fmt(res.init_linf_error));

  std::optional<Eigen::VectorXd> tail_coeffs;
  auto trajectory_error = [&](const std::string& method, double dt) {
    const timestep::ButcherTableau tab = timestep::tableau(method);
    double worst = ((X * c0 - u0).array().abs() / u0.array().abs()).maxCoeff();
    Eigen::VectorXd ue(static_cast<Eigen::Index>(grid.size()));
    const auto traj = timestep::integrate({0.0, c0}, tab, dt, cfg.t_end, X, Xs, eps_of(cfg), false,
                                          [&](const timestep::TimeState& st) {
                                            for (std::size_t i = 0; i < grid.size(); ++i) {
                                              ue(static_cast<Eigen::Index>(i)) = heat_exact(grid.x[i], st.t);
                                            }
                                            const double e = ((X * st.coeffs - ue).array().abs() / ue.array().abs()).maxCoeff();
                                            worst = std::max(worst, e);
                                          });
    if (method == cfg.tail_method && dt == cfg.tail_dt) tail_coeffs = traj.final_state.coeffs;
    return worst;
  };

  CsvWriter csv(opts.out_dir, cfg.name + "_time.csv", {"method", "dt", "max_rel_error"});
  for (const auto& method : cfg.methods) {
    for (double dt : cfg.dts) {
      try {
        const auto t1 = Clock::now();
        const TimeRow row{method, dt, trajectory_error(method, dt)};
        res.time.push_back(row);
        csv.row({row.method, fmt(row.dt), fmt(row.max_rel_error)});
        log(method, " dt=", fmt(dt), " max rel error ", fmt(row.max_rel_error), " (", fmt_ms(ms_since(t1)), " ms)");
      } catch (const Error& e) {
        summary["failure"] = {{"N", n}, {"dt", dt}, {"method", method}, {"message", e.what()}};
        throw;
      }
    }
  }

  if (cfg.tail_method.empty()) return;
  if (!tail_coeffs) {
    try {
      (void)trajectory_error(cfg.tail_method, cfg.tail_dt);
    } catch (const Error& e) {
      summary["failure"] = {{"N", n}, {"dt", cfg.tail_dt}, {"method", cfg.tail_method}, {"message", e.what()}};
      throw;
    }
  }
  const std::vector<double> xs = tail_grid(cfg.tail_x_max, cfg.tail_samples);
  const frame::Points pts = frame::Points::line(xs);
  const std::vector<double> u = evaluate_safe(space, *tail_coeffs, pts);
  res.tail.columns = {"x", "exact", "approx", "abs_error", "rel_error"};
  CsvWriter tail(opts.out_dir, cfg.name + "_tail.csv", res.tail.columns);
  double worst_end = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double ex = heat_exact(xs[i], cfg.t_end);
    const std::vector<double> row{xs[i], ex, u[i], std::abs(u[i] - ex), std::abs(u[i] - ex) / ex};
    res.tail.rows.push_back(row);
    tail.row({fmt(row[0]), fmt(row[1]), fmt(row[2]), fmt(row[3]), fmt(row[4])});
  }
  for (double x : {-cfg.tail_x_max, cfg.tail_x_max}) {
    const double ex = heat_exact(x, cfg.t_end);
    const double v = evaluate_safe(space, *tail_coeffs, frame::Points::line({x}))[0];
    worst_end = std::max(worst_end, std::abs(v - ex) / ex);
  }
  summary["tail"] = {{"method", cfg.tail_method}, {"dt", cfg.tail_dt}, {"x_max", cfg.tail_x_max},
                     {"rel_error_at_x_max", worst_end}};
}

void run_variable_s(const ExperimentConfig& cfg, const RunOptions& opts, RunResult& res, nlohmann::json& summary) {
  const Logger log{opts.log};
  const frame::Points grid = build_grid(cfg);
  res.n_points = grid.size();
  const int n = cfg.max_n();
  const auto factory = [&](double s) {
    const frame::SumSpace sp = build_space(cfg, n, s);
    return timestep::StepMatrices{frame::assemble_matrix(frame::identity_image(sp), grid),
                                  frame::assemble_matrix(frame::operator_image(sp, build_operator(cfg, s)), grid)};
  };
  const auto s_of_t = [&](double t) { return cfg.s_start + cfg.s_rate * t; };
  const timestep::ButcherTableau tab = timestep::tableau(cfg.methods.front());
  const double dt = cfg.dts.front();
  const Eigen::VectorXd u0 = heat_initial(grid);

  const timestep::StepMatrices m0 = factory(s_of_t(0.0));
  const Eigen::VectorXd c0 = expand_initial(cfg, opts, m0.X, u0, res);
  summary["init_linf_error"] = res.init_linf_error;
  log(cfg.name, ": ", grid.size(), " collocation points, ", n, " columns, initial error ", fmt(res.init_linf_error));

  const std::vector<double> xs = [&] {
    std::vector<double> v;
    const double lo = std::log(0.5), hi = std::log(cfg.tail_x_max);
    for (int k = 0; k < cfg.tail_samples; ++k) v.push_back(std::exp(lo + (hi - lo) * k / (cfg.tail_samples - 1)));
    return v;
  }();
  const frame::Points pts = frame::Points::line(xs);

  std::vector<std::string> labels{"variable"};
  std::vector<std::vector<double>> profiles;
  try {
    const auto traj = timestep::integrate_variable_s({0.0, c0}, tab, dt, cfg.t_end, s_of_t, factory, eps_of(cfg));
    const double s_last = s_of_t(cfg.t_end - dt);
    profiles.push_back(evaluate_safe(build_space(cfg, n, s_last), traj.final_state.coeffs, pts));
    log("variable exponent done");
    for (double sc : cfg.compare_s) {
      const timestep::StepMatrices m = factory(sc);
      const Eigen::VectorXd c = frame::LsSystem(m.X).solve(u0, eps_of(cfg)).coeffs;
      const auto tr = timestep::integrate({0.0, c}, tab, dt, cfg.t_end, m.X, m.X_star, eps_of(cfg));
      profiles.push_back(evaluate_safe(build_space(cfg, n, sc), tr.final_state.coeffs, pts));
      labels.push_back("s=" + fmt(sc));
      log("constant s=", fmt(sc), " done");
    }
  } catch (const Error& e) {
    summary["failure"] = {{"N", n}, {"dt", dt}, {"method", tab.name}, {"message", e.what()}};
    throw;
  }

  res.tail.columns = {"x"};
  for (const auto& l : labels) res.tail.columns.push_back("u_" + l);
  CsvWriter csv(opts.out_dir, cfg.name + "_profile.csv", res.tail.columns);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::vector<double> row{xs[i]};
    std::vector<std::string> cells{fmt(xs[i])};
    for (const auto& p : profiles) {
      row.push_back(p[i]);
      cells.push_back(fmt(p[i]));
    }
    res.tail.rows.push_back(row);
    csv.row(cells);
  }

  nlohmann::json slopes = nlohmann::json::object();
  std::vector<double> fit_x;
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] >= cfg.slope_window[0] && xs[i] <= cfg.slope_window[1]) {
      fit_x.push_back(xs[i]);
      idx.push_back(i);
    }
  }
  std::vector<double> slope_values;
  for (std::size_t k = 0; k < profiles.size(); ++k) {
    std::vector<double> fy;
    for (std::size_t i : idx) fy.push_back(profiles[k][i]);
    slope_values.push_back(loglog_slope(fit_x, fy));
    slopes[labels[k]] = slope_values.back();
  }
  summary["tail_slopes"] = slopes;
  if (profiles.size() > 1) {
    std::size_t best = 1;
    for (std::size_t k = 2; k < profiles.size(); ++k) {
      if (std::abs(slope_values[k] - slope_values[0]) < std::abs(slope_values[best] - slope_values[0])) best = k;
    }
    summary["closest_constant"] = labels[best];
  }
}

}  // namespace

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (!(x[i] > 0.0) || !std::isfinite(y[i]) || y[i] == 0.0) continue;
    const double lx = std::log(x[i]);
    const double ly = std::log(std::abs(y[i]));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  if (n < 2) return kNaN;
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

RunResult run(const ExperimentConfig& cfg, const RunOptions& opts) {
  cfg.validate();
  if (opts.out_dir) std::filesystem::create_directories(*opts.out_dir);
  RunResult res;
  nlohmann::json summary = base_summary(cfg, 0);
  try {
    switch (cfg.problem) {
      case Problem::Heat:
        run_heat(cfg, opts, res, summary);
        break;
      case Problem::VariableS:
        run_variable_s(cfg, opts, res, summary);
        break;
      default:
        run_stationary(cfg, opts, res, summary);
    }
  } catch (...) {
    summary["collocation_points"] = res.n_points;
    summary["status"] = "failed";
    write_summary(opts, summary);
    throw;
  }
  summary["collocation_points"] = res.n_points;
  summary["status"] = "ok";
  nlohmann::json conv = nlohmann::json::array();
  for (const auto& r : res.convergence) {
    conv.push_back({{"N", r.n}, {"rhs_linf_error", r.rhs_linf_error}, {"sol_linf_error", r.sol_linf_error},
                    {"coeff_inf_norm", r.coeff_inf_norm}, {"kept_rank", r.kept_rank}});
  }
  summary["convergence"] = conv;
  if (!res.time.empty()) {
    nlohmann::json t = nlohmann::json::array();
    for (const auto& r : res.time) t.push_back({{"method", r.method}, {"dt", r.dt}, {"max_rel_error", r.max_rel_error}});
    summary["time"] = t;
  }
  res.summary = summary;
  write_summary(opts, summary);
  return res;
}

std::string dry_run_report(const ExperimentConfig& cfg) {
  cfg.validate();
  std::ostringstream os;
  os << "experiment " << cfg.name << " (problem " << to_string(cfg.problem) << ", dim " << cfg.dim << ")\n";
  const double s = cfg.problem == Problem::VariableS ? cfg.s_start : cfg.s;
  os << "operator: " << build_operator(cfg, s).describe() << "\n";
  const frame::Points grid = build_grid(cfg);
  os << "grid: " << grid.size() << " collocation points, " << cfg.pts_per_segment << " per segment, eps_offset "
     << cfg.eps_offset;
  if (cfg.dim == 2) os << ", " << cfg.n_angles << " angles";
  os << "\n";
  const frame::SumSpace space = build_space(cfg, cfg.max_n(), s);
  os << "space: " << space.size() << " columns over " << space.families().size() << " families\n";
  for (std::size_t f = 0; f < space.families().size(); ++f) {
    os << "  " << space.families()[f].describe() << ": " << space.count(static_cast<int>(f)) << " columns\n";
  }
  os << "N schedule:";
  for (int n : cfg.n_schedule) os << " " << n;
  os << "\n";
  if (grid.size() < 4 * static_cast<std::size_t>(cfg.max_n())) {
    os << "warning: fewer than 4N collocation points at the largest N\n";
  }
  os << "svd_eps: " << (cfg.svd_eps ? fmt_short(*cfg.svd_eps) : std::string("relative default")) << "\n";
  if (cfg.time_dependent()) {
    os << "time: methods";
    for (const auto& m : cfg.methods) os << " " << m;
    os << "; dts";
    for (double dt : cfg.dts) os << " " << fmt_short(dt) << " (" << timestep::step_count(0.0, cfg.t_end, dt) << " steps)";
    os << "; t_end " << fmt_short(cfg.t_end) << "\n";
    if (cfg.problem == Problem::VariableS) {
      os << "s(t) = " << fmt_short(cfg.s_start) << " + " << fmt_short(cfg.s_rate) << " t\n";
    }
  }
  return os.str();
}

}  // namespace fracframes::cli

#include "fracframes/timestep.hpp"

#include <cmath>
#include <sstream>

#include "fracframes/error.hpp"

namespace fracframes::timestep {

namespace {

constexpr double kOrderTol = 1e-12;

ButcherTableau make(std::string name, std::initializer_list<std::initializer_list<double>> A,
                    std::initializer_list<double> b, std::initializer_list<double> c, int order) {
  ButcherTableau tab;
  tab.name = std::move(name);
  const auto m = static_cast<Eigen::Index>(b.size());
  tab.A.resize(m, m);
  Eigen::Index i = 0;
  for (const auto& row : A) {
    Eigen::Index j = 0;
    for (double v : row) tab.A(i, j++) = v;
    ++i;
  }
  tab.b = Eigen::Map<const Eigen::VectorXd>(b.begin(), m);
  tab.c = Eigen::Map<const Eigen::VectorXd>(c.begin(), m);
  tab.order = order;
  tab.validate();
  return tab;
}

}  // namespace

double ButcherTableau::order_defect() const {
  double worst = std::abs(b.sum() - 1.0);
  for (int k = 1; k <= order; ++k) {
    worst = std::max(worst, std::abs(b.dot(c.array().pow(k - 1).matrix()) - 1.0 / k));
  }
  if (order >= 3) worst = std::max(worst, std::abs(b.dot(A * c) - 1.0 / 6.0));
  worst = std::max(worst, (A.rowwise().sum() - c).cwiseAbs().maxCoeff());
  return worst;
}

void ButcherTableau::validate() const {
  const auto m = b.size();
  if (m < 1 || c.size() != m || A.rows() != m || A.cols() != m) {
    throw ParameterError("ButcherTableau " + name + ": inconsistent shapes");
  }
  const double defect = order_defect();
  if (!(defect <= kOrderTol)) {
    std::ostringstream os;
    os << "ButcherTableau " << name << ": order conditions violated by " << defect;
    throw ParameterError(os.str());
  }
}

ButcherTableau tableau(std::string_view name) {
  if (name == "backward-euler") return make("backward-euler", {{1.0}}, {1.0}, {1.0}, 1);
  if (name == "implicit-midpoint") return make("implicit-midpoint", {{0.5}}, {1.0}, {0.5}, 2);
  if (name == "gauss-legendre-4") {
    const double r = std::sqrt(3.0) / 6.0;
    return make("gauss-legendre-4", {{0.25, 0.25 - r}, {0.25 + r, 0.25}}, {0.5, 0.5}, {0.5 - r, 0.5 + r}, 4);
  }
  if (name == "gauss-legendre-6") {
    const double q = std::sqrt(15.0);
    return make("gauss-legendre-6",
                {{5.0 / 36.0, 2.0 / 9.0 - q / 15.0, 5.0 / 36.0 - q / 30.0},
                 {5.0 / 36.0 + q / 24.0, 2.0 / 9.0, 5.0 / 36.0 - q / 24.0},
                 {5.0 / 36.0 + q / 30.0, 2.0 / 9.0 + q / 15.0, 5.0 / 36.0}},
                {5.0 / 18.0, 4.0 / 9.0, 5.0 / 18.0}, {0.5 - q / 10.0, 0.5, 0.5 + q / 10.0}, 6);
  }
  throw ParameterError("unknown tableau '" + std::string(name) +
                       "' (expected backward-euler, implicit-midpoint, gauss-legendre-4 or gauss-legendre-6)");
}

std::vector<std::string> tableau_names() {
  return {"backward-euler", "implicit-midpoint", "gauss-legendre-4", "gauss-legendre-6"};
}

Eigen::MatrixXd kronecker_system(const ButcherTableau& tab, double dt, const Eigen::MatrixXd& X,
                                 const Eigen::MatrixXd& X_star) {
  if (X.rows() != X_star.rows() || X.cols() != X_star.cols()) {
    throw ShapeError("kronecker_system: X and X_star shapes differ");
  }
  const int m = tab.stages();
  const Eigen::Index M = X.rows();
  const Eigen::Index N = X.cols();
  Eigen::MatrixXd XA(m * M, m * N);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      auto block = XA.block(i * M, j * N, M, N);
      block = (dt * tab.A(i, j)) * X_star;
      if (i == j) block += X;
    }
  }
  return XA;
}

Stepper::Stepper(ButcherTableau tab, double dt, const Eigen::MatrixXd& X, const Eigen::MatrixXd& X_star,
                 std::optional<double> eps)
    : tab_(std::move(tab)),
      dt_(dt),
      X_star_(X_star),
      system_(kronecker_system(tab_, dt, X, X_star)),
      eps_(eps) {
  const Eigen::VectorXd& sigma = system_.singular_values();
  const double cutoff = eps ? *eps : frame::kDefaultRelativeCutoff * (sigma.size() ? sigma(0) : 0.0);
  while (kept_rank_ < sigma.size() && sigma(kept_rank_) >= cutoff && sigma(kept_rank_) > 0.0) ++kept_rank_;
}

TimeState Stepper::step(const TimeState& state) const {
  if (state.coeffs.size() != X_star_.cols()) throw ShapeError("rk_step: coefficient length does not match X");
  const int m = tab_.stages();
  const Eigen::Index M = X_star_.rows();
  const Eigen::Index N = X_star_.cols();
  const Eigen::VectorXd y = -(X_star_ * state.coeffs);
  Eigen::VectorXd rhs(m * M);
  for (int i = 0; i < m; ++i) rhs.segment(i * M, M) = y;
  const Eigen::VectorXd k = system_.solve(rhs, eps_).coeffs;
  TimeState next;
  next.t = state.t + dt_;
  next.coeffs = state.coeffs;
  for (int i = 0; i < m; ++i) next.coeffs += dt_ * tab_.b(i) * k.segment(i * N, N);
  return next;
}

TimeState rk_step(const TimeState& state, const ButcherTableau& tab, double dt, const Eigen::MatrixXd& X,
                  const Eigen::MatrixXd& X_star, std::optional<double> eps) {
  return Stepper(tab, dt, X, X_star, eps).step(state);
}

int step_count(double t0, double t_end, double dt) {
  if (!(dt > 0.0)) throw ParameterError("time step must be positive");
  if (t_end < t0) throw ParameterError("t_end precedes the initial time");
  const double steps = (t_end - t0) / dt;
  const double rounded = std::round(steps);
  if (std::abs(steps - rounded) > 1e-12 * std::max(1.0, steps) + 1e-9) {
    std::ostringstream os;
    os << "dt = " << dt << " does not divide [" << t0 << ", " << t_end << "]";
    throw ParameterError(os.str());
  }
  return static_cast<int>(rounded);
}

Trajectory integrate(const TimeState& init, const ButcherTableau& tab, double dt, double t_end,
                     const Eigen::MatrixXd& X, const Eigen::MatrixXd& X_star, std::optional<double> eps,
                     bool keep_snapshots, const StepObserver& observer) {
  const int steps = step_count(init.t, t_end, dt);
  Trajectory traj;
  traj.final_state = init;
  if (keep_snapshots) traj.snapshots.push_back(init);
  if (steps == 0) return traj;
  const Stepper stepper(tab, dt, X, X_star, eps);
  TimeState state = init;
  for (int j = 1; j <= steps; ++j) {
    state = stepper.step(state);
    state.t = init.t + j * dt;
    traj.records.push_back({state.t, state.coeffs.cwiseAbs().maxCoeff(), stepper.kept_rank()});
    if (keep_snapshots) traj.snapshots.push_back(state);
    if (observer) observer(state);
  }
  traj.final_state = state;
  return traj;
}

Trajectory integrate_variable_s(const TimeState& init, const ButcherTableau& tab, double dt, double t_end,
                                const std::function<double(double)>& s_of_t, const MatrixFactory& factory,
                                std::optional<double> eps, bool keep_snapshots, const VariableObserver& observer) {
  const int steps = step_count(init.t, t_end, dt);
  Trajectory traj;
  traj.final_state = init;
  if (keep_snapshots) traj.snapshots.push_back(init);
  StepMatrices current = factory(s_of_t(init.t));
  TimeState state = init;
  for (int j = 1; j <= steps; ++j) {
    const double t_n = init.t + (j - 1) * dt;
    if (j > 1) {
      StepMatrices next = factory(s_of_t(t_n));
      const Eigen::VectorXd values = current.X * state.coeffs;
      const frame::LsSystem fit(next.X);
      state.coeffs = fit.solve(values, eps).coeffs;
      current = std::move(next);
    }
    const Stepper stepper(tab, dt, current.X, current.X_star, eps);
    state = stepper.step(state);
    state.t = init.t + j * dt;
    traj.records.push_back({state.t, state.coeffs.cwiseAbs().maxCoeff(), stepper.kept_rank()});
    if (keep_snapshots) traj.snapshots.push_back(state);
    if (observer) observer(state, current.X);
  }
  traj.final_state = state;
  return traj;
}

}  // namespace fracframes::timestep

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "fracframes/frame.hpp"

namespace fracframes::timestep {

/// Implicit Runge-Kutta tableau (A, b, c) with its classical order.
struct ButcherTableau {
  std::string name;
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
  Eigen::VectorXd c;
  int order = 1;

  [[nodiscard]] int stages() const noexcept { return static_cast<int>(b.size()); }
  /// Largest violation among sum b = 1, sum b c^{k-1} = 1/k (k <= order),
  /// sum b A c = 1/6 (order >= 3) and the row sums A 1 = c.
  [[nodiscard]] double order_defect() const;
  /// Throws ParameterError when order_defect() exceeds 1e-12 or shapes disagree.
  void validate() const;
};

/// backward-euler, implicit-midpoint, gauss-legendre-4, gauss-legendre-6.
ButcherTableau tableau(std::string_view name);
std::vector<std::string> tableau_names();

struct TimeState {
  double t = 0.0;
  Eigen::VectorXd coeffs;
};

/// X_A = I_m (x) X + dt (A (x) X_star).
Eigen::MatrixXd kronecker_system(const ButcherTableau& tab, double dt, const Eigen::MatrixXd& X,
                                 const Eigen::MatrixXd& X_star);

/// One method/step-size pair for u_t + (-Delta)^s u = 0 with X = S and
/// X_star = (-Delta)^s S at the collocation points. The stage system
/// X_A k = (y; ...; y), y = -X_star u, is factored once.
class Stepper {
 public:
  Stepper(ButcherTableau tab, double dt, const Eigen::MatrixXd& X, const Eigen::MatrixXd& X_star,
          std::optional<double> eps = std::nullopt);

  [[nodiscard]] TimeState step(const TimeState& state) const;
  [[nodiscard]] int kept_rank() const noexcept { return kept_rank_; }
  [[nodiscard]] double dt() const noexcept { return dt_; }

 private:
  ButcherTableau tab_;
  double dt_;
  Eigen::MatrixXd X_star_;
  frame::LsSystem system_;
  std::optional<double> eps_;
  int kept_rank_ = 0;
};

/// A single step, factoring X_A afresh.
TimeState rk_step(const TimeState& state, const ButcherTableau& tab, double dt, const Eigen::MatrixXd& X,
                  const Eigen::MatrixXd& X_star, std::optional<double> eps = std::nullopt);

struct StepRecord {
  double t = 0.0;
  double coeff_inf_norm = 0.0;
  int kept_rank = 0;
};

struct Trajectory {
  TimeState final_state;
  std::vector<StepRecord> records;
  /// Filled only when snapshots were requested; includes the initial state.
  std::vector<TimeState> snapshots;
};

using StepObserver = std::function<void(const TimeState&)>;

/// Integrates from init.t to t_end with fixed dt, reusing one factorization.
/// The observer (if any) sees every state after each step.
Trajectory integrate(const TimeState& init, const ButcherTableau& tab, double dt, double t_end,
                     const Eigen::MatrixXd& X, const Eigen::MatrixXd& X_star,
                     std::optional<double> eps = std::nullopt, bool keep_snapshots = false,
                     const StepObserver& observer = {});

/// Matrices of S and (-Delta)^s S on a fixed grid for a given exponent.
struct StepMatrices {
  Eigen::MatrixXd X;
  Eigen::MatrixXd X_star;
};
using MatrixFactory = std::function<StepMatrices(double s)>;

/// Variable exponent: at each step the space is rebuilt for s(t_n) (frozen over
/// the stages), the previous point values are re-expanded in it by a truncated
/// SVD fit, and one step is taken. init.coeffs refer to factory(s(init.t)).
/// The observer receives each new state with the X its coefficients refer to.
using VariableObserver = std::function<void(const TimeState&, const Eigen::MatrixXd& X)>;
Trajectory integrate_variable_s(const TimeState& init, const ButcherTableau& tab, double dt, double t_end,
                                const std::function<double(double)>& s_of_t, const MatrixFactory& factory,
                                std::optional<double> eps = std::nullopt, bool keep_snapshots = false,
                                const VariableObserver& observer = {});

/// Number of steps for [t0, t_end]; throws unless dt divides the horizon to 1e-12.
int step_count(double t0, double t_end, double dt);

}  // namespace fracframes::timestep

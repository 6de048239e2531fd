#pragma once

#include <functional>
#include <optional>

#include <Eigen/Dense>

#include "fracframes/frame.hpp"

namespace fracframes::solver {

struct Diagnostics {
  double residual = 0.0;
  double rhs_linf_error = 0.0;
  double coeff_inf_norm = 0.0;
  int kept_rank = 0;
  bool all_truncated = false;
};

/// u(x) = S(x) coeffs.
struct Solution {
  frame::SumSpace space;
  Eigen::VectorXd coeffs;
  Diagnostics diagnostics;
};

using Rhs = std::function<double(double x, double y)>;

/// Sample f on the points (y = 0 in 1D).
Eigen::VectorXd sample(const Rhs& f, const frame::Points& points);

/// Solve L u = f by expanding f in L S; the same coefficients give u in S.
Solution solve_stationary(const frame::OperatorSpec& op, const Eigen::VectorXd& f_samples,
                          const frame::SumSpace& space, const frame::Points& points,
                          std::optional<double> eps = std::nullopt);
Solution solve_stationary(const frame::OperatorSpec& op, const Rhs& f, const frame::SumSpace& space,
                          const frame::Points& points, std::optional<double> eps = std::nullopt);

/// Solve against an already factored image system whose columns match space.
Solution solve_with(const frame::LsSystem& image_system, const frame::SumSpace& space,
                    const Eigen::VectorXd& f_samples, std::optional<double> eps = std::nullopt);

/// S(x) coeffs at one point. Outside every interval or disk only the extended
/// families contribute.
double evaluate(const Solution& sol, double x, double y = 0.0);
Eigen::VectorXd evaluate(const Solution& sol, const frame::Points& points);

/// (-Delta)^s e^{-x^2} = 4^s Gamma(s + 1/2) / Gamma(1/2) 1F1(s + 1/2; 1/2; -x^2).
double gaussian_frac_lap_1d(double s, double x);

/// e^{-x^2} + 4^s Gamma(s + 1/2) / Gamma(1/2) 1F1(s + 1/2; 1/2; -x^2), the data for
/// (I + (-Delta)^s) u = f with u = e^{-x^2}.
double rhs_gaussian_1d(double s, double x);

/// (-Delta)^s e^{-x^2-y^2} = 4^s Gamma(s + 1) 1F1(s + 1; 1; -x^2 - y^2).
double gaussian_frac_lap_2d(double s, double x, double y);

/// 2 Gamma(3/2) 1F1(3/2; 1; -x^2 - y^2) = (-Delta)^{1/2} e^{-x^2-y^2}.
double rhs_gaussian_2d(double x, double y);

}  // namespace fracframes::solver

#include "fracframes/solver.hpp"

#include <cmath>
#include <numbers>

#include "fracframes/error.hpp"
#include "fracframes/specfun.hpp"

namespace fracframes::solver {

Eigen::VectorXd sample(const Rhs& f, const frame::Points& points) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    out(static_cast<Eigen::Index>(i)) = f(points.x[i], points.dim == 2 ? points.y[i] : 0.0);
  }
  return out;
}

Solution solve_with(const frame::LsSystem& image_system, const frame::SumSpace& space,
                    const Eigen::VectorXd& f_samples, std::optional<double> eps) {
  if (image_system.cols() != space.size()) throw ShapeError("solve_with: system columns do not match the space");
  const frame::TsvdReport rep = image_system.solve(f_samples, eps);
  Solution sol;
  sol.space = space;
  sol.coeffs = rep.coeffs;
  sol.diagnostics.residual = rep.residual;
  sol.diagnostics.rhs_linf_error = (image_system.matrix() * rep.coeffs - f_samples).cwiseAbs().maxCoeff();
  sol.diagnostics.coeff_inf_norm = rep.coeff_inf_norm;
  sol.diagnostics.kept_rank = rep.kept_rank;
  sol.diagnostics.all_truncated = rep.all_truncated;
  return sol;
}

Solution solve_stationary(const frame::OperatorSpec& op, const Eigen::VectorXd& f_samples,
                          const frame::SumSpace& space, const frame::Points& points, std::optional<double> eps) {
  const frame::LsSystem system = frame::assemble(frame::operator_image(space, op), points);
  return solve_with(system, space, f_samples, eps);
}

Solution solve_stationary(const frame::OperatorSpec& op, const Rhs& f, const frame::SumSpace& space,
                          const frame::Points& points, std::optional<double> eps) {
  return solve_stationary(op, sample(f, points), space, points, eps);
}

Eigen::VectorXd evaluate(const Solution& sol, const frame::Points& points) {
  if (sol.coeffs.size() != sol.space.size()) throw ShapeError("evaluate: coefficient length does not match the space");
  return frame::assemble_matrix(frame::identity_image(sol.space), points) * sol.coeffs;
}

double evaluate(const Solution& sol, double x, double y) {
  const frame::Points p = sol.space.dim() == 1 ? frame::Points::line({x}) : frame::Points::plane({x}, {y});
  return evaluate(sol, p)(0);
}

double gaussian_frac_lap_1d(double s, double x) {
  if (!(s > 0.0 && s < 1.0)) throw ParameterError("gaussian_frac_lap_1d: s must lie in (0, 1)");
  return std::pow(4.0, s) * std::tgamma(s + 0.5) / std::sqrt(std::numbers::pi) *
         specfun::hyp1f1(s + 0.5, 0.5, -x * x);
}

double rhs_gaussian_1d(double s, double x) { return std::exp(-x * x) + gaussian_frac_lap_1d(s, x); }

double gaussian_frac_lap_2d(double s, double x, double y) {
  if (!(s > 0.0 && s < 1.0)) throw ParameterError("gaussian_frac_lap_2d: s must lie in (0, 1)");
  return std::pow(4.0, s) * std::tgamma(s + 1.0) * specfun::hyp1f1(s + 1.0, 1.0, -(x * x + y * y));
}

double rhs_gaussian_2d(double x, double y) {
  return std::sqrt(std::numbers::pi) * specfun::hyp1f1(1.5, 1.0, -(x * x + y * y));
}

}  // namespace fracframes::solver

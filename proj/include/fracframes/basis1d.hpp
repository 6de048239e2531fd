#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace fracframes::basis1d {

/// Closed interval [a, b] with a < b, and the affine map onto [-1, 1].
struct Interval {
  double a = -1.0;
  double b = 1.0;

  Interval() = default;
  Interval(double left, double right);

  [[nodiscard]] double center() const noexcept { return 0.5 * (a + b); }
  [[nodiscard]] double half_width() const noexcept { return 0.5 * (b - a); }
  /// y = 2/(b-a) (x - (a+b)/2)
  [[nodiscard]] double to_reference(double x) const noexcept { return (x - center()) / half_width(); }
  bool operator==(const Interval&) const = default;
};

/// Jacobi weight exponents, both > -1.
struct JacobiParams {
  double a = 0.0;
  double b = 0.0;
  void validate() const;
};

/// Weight exponent a > -1 and fractional exponent s in (-1/2, 0) U (0, 1).
/// s = -1/2 is accepted for degrees n >= 1 only.
struct ExtendedParams {
  double a = 0.0;
  double s = 0.5;
  void validate(int n) const;
  /// True when the weight matches the exponent and the scaled-Jacobi form applies.
  [[nodiscard]] bool matched() const noexcept;
};

/// Distance from |x| = 1 below which extended functions refuse to evaluate.
inline constexpr double kSingularGuard = 1e-12;

/// P_n^{(a,b)}(x) by forward three-term recurrence; defined for all real x.
double jacobi_p(int n, const JacobiParams& params, double x);

/// P_0 .. P_{n_max} at x, written to out (size n_max + 1).
void jacobi_p_all(int n_max, const JacobiParams& params, double x, std::span<double> out);

/// Q_n^{(a,b)}(x) = (1-x)_+^a (1+x)_+^b P_n^{(a,b)}(x); zero for |x| >= 1.
double weighted_q(int n, const JacobiParams& params, double x);

/// The constant c_{s,n} with Ptilde_n^{(s,s)} = c_{s,n} P_n^{(s,s)} on (-1, 1).
double scaled_jacobi_constant(int n, double s);

/// Ptilde_n^{(a,s)}(x) = (-Delta)^s Q_n^{(a,a)}(x) for |x| != 1.
double extended_p(int n, const ExtendedParams& params, double x);

/// Degrees 0..n_max at every point: rows are points, columns are degrees.
/// Inside (-1, 1) the columns come from a forward recurrence seeded by degrees
/// 0 and 1 (1 and 2 when s = -1/2); outside each degree is evaluated from its hypergeometric form.
/// With s = -1/2 column 0 is undefined and filled with NaN.
Eigen::MatrixXd extended_p_batch(int n_max, const ExtendedParams& params, std::span<const double> xs);

/// f^I(x) = f(y) with y the reference coordinate of x in I.
template <typename F>
double affine_eval(F&& f, const Interval& interval, double x) {
  return f(interval.to_reference(x));
}

}  // namespace fracframes::basis1d

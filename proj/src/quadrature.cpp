#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "fracframes/error.hpp"
#include "fracframes/specfun.hpp"

namespace fracframes::specfun {

namespace {

// P_n^{(a,b)}(x) and P_{n-1}^{(a,b)}(x) by forward recurrence.
std::pair<double, double> jacobi_pair(int n, double a, double b, double x) {
  double p_prev = 1.0;
  double p = 0.5 * (a - b + (a + b + 2.0) * x);
  if (n == 0) return {1.0, 0.0};
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + a + b;
    const double lead = 2.0 * (k + 1) * (k + a + b + 1.0) * s;
    const double mid = (s + 1.0) * ((s + 2.0) * s * x + a * a - b * b);
    const double back = 2.0 * (k + a) * (k + b) * (s + 2.0);
    const double next = (mid * p - back * p_prev) / lead;
    p_prev = p;
    p = next;
  }
  return {p, p_prev};
}

double jacobi_value(int n, double a, double b, double x) { return jacobi_pair(n, a, b, x).first; }

}  // namespace

double QuadRule::weight_integral() const {
  return std::exp2(alpha + beta + 1.0) * gamma_ratio({alpha + 1.0, beta + 1.0}, {alpha + beta + 2.0});
}

QuadRule quad_rule(QuadKind kind, int n, double alpha, double beta) {
  if (n < 1) throw ParameterError("quad_rule: need at least one node");
  if (kind == QuadKind::GaussLegendre) {
    alpha = 0.0;
    beta = 0.0;
  }
  if (!(alpha > -1.0) || !(beta > -1.0)) {
    throw ParameterError("quad_rule: Jacobi exponents must exceed -1");
  }
  const double ab = alpha + beta;

  // Golub-Welsch start.
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  for (int k = 0; k < n; ++k) {
    if (k == 0) {
      diag(k) = (beta - alpha) / (ab + 2.0);
    } else {
      const double s = 2.0 * k + ab;
      diag(k) = (beta * beta - alpha * alpha) / (s * (s + 2.0));
    }
  }
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    double v;
    if (k == 1) {
      v = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      v = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
    sub(k - 1) = std::sqrt(v);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;
  eig.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  std::vector<double> x(eig.eigenvalues().data(), eig.eigenvalues().data() + n);
  std::sort(x.begin(), x.end());

  // Newton polish on P_n, then weights from the derivative formula.
  const double log_const = (ab + 1.0) * std::log(2.0) + std::lgamma(n + alpha + 1.0) +
                           std::lgamma(n + beta + 1.0) - std::lgamma(n + ab + 1.0) -
                           std::lgamma(n + 1.0);
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) {
    double xi = x[i];
    for (int it = 0; it < 4; ++it) {
      const double p = jacobi_value(n, alpha, beta, xi);
      const double dp = n == 0 ? 0.0 : 0.5 * (n + ab + 1.0) * jacobi_value(n - 1, alpha + 1.0, beta + 1.0, xi);
      if (dp == 0.0) break;
      const double step = p / dp;
      xi -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(xi))) break;
    }
    x[i] = xi;
    const double dp = 0.5 * (n + ab + 1.0) * jacobi_value(n - 1, alpha + 1.0, beta + 1.0, xi);
    w[i] = std::exp(log_const) / ((1.0 - xi * xi) * dp * dp);
  }

  for (int i = 1; i < n; ++i) {
    if (!(x[i] > x[i - 1])) throw ConvergenceError("quad_rule: nodes failed to separate");
  }
  QuadRule rule;
  rule.nodes = std::move(x);
  rule.weights = std::move(w);
  rule.kind = kind;
  rule.alpha = alpha;
  rule.beta = beta;
  return rule;
}

}  // namespace fracframes::specfun

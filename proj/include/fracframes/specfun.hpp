#pragma once

#include <initializer_list>
#include <string>
#include <vector>

namespace fracframes::specfun {

/// True when x is 0, -1, -2, ... (exactly).
bool is_nonpositive_integer(double x) noexcept;

/// Gamma function. Throws PoleError at nonpositive integers.
double gamma_fn(double x);

/// Reciprocal Gamma function 1/Gamma(x); exactly zero at the poles of Gamma.
double rgamma(double x) noexcept;

/// prod Gamma(num_i) / prod Gamma(den_i), evaluated without intermediate
/// overflow. A pole in the denominator gives 0; a pole in the numerator throws.
double gamma_ratio(std::initializer_list<double> num, std::initializer_list<double> den);

/// Gauss hypergeometric function 2F1(a, b; c; z) for real arguments.
///
/// Branches:
///   - terminating polynomial when a or b is a nonpositive integer (any real z);
///   - power series for |z| <= kHyp2f1Switch, replaced by an Euler or Pfaff
///     transform when that cancels less;
///   - Pfaff transformation z -> z/(z-1) for z < -kHyp2f1Switch;
///   - connection formula z -> 1-z on (kHyp2f1Switch, 1), using the logarithmic
///     limit form when c-a-b lies within kDegenerateTol of an integer; with
///     a, b, c > 0 and large a b (1-z) the positive direct series is summed instead;
///   - Gauss summation at z = 1 when c-a-b > 0.
/// Non-terminating evaluation for z > 1 has a complex value and throws.
double hyp2f1(double a, double b, double c, double z);

/// Kummer confluent hypergeometric function 1F1(a; b; z).
/// Negative arguments go through Kummer's transformation e^z 1F1(b-a; b; -z),
/// or below -kHyp1f1Asymptotic through the large-argument expansion.
double hyp1f1(double a, double b, double z);

inline constexpr double kHyp1f1Asymptotic = 500.0;

inline constexpr double kHyp2f1Switch = 0.7;
inline constexpr double kDegenerateTol = 1e-7;

enum class QuadKind { GaussLegendre, GaussJacobi };

/// n-point Gauss rule on [-1, 1] exact for polynomials of degree 2n-1 against
/// the weight (1-x)^alpha (1+x)^beta (alpha = beta = 0 for Gauss-Legendre).
struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  QuadKind kind = QuadKind::GaussLegendre;
  double alpha = 0.0;
  double beta = 0.0;

  [[nodiscard]] std::size_t size() const noexcept { return nodes.size(); }
  /// Exact integral of the weight function over [-1, 1].
  [[nodiscard]] double weight_integral() const;
};

QuadRule quad_rule(QuadKind kind, int n, double alpha = 0.0, double beta = 0.0);
inline QuadRule gauss_legendre(int n) { return quad_rule(QuadKind::GaussLegendre, n); }
inline QuadRule gauss_jacobi(int n, double alpha, double beta) {
  return quad_rule(QuadKind::GaussJacobi, n, alpha, beta);
}

}  // namespace fracframes::specfun

#pragma once

#include <span>

#include <Eigen/Dense>

namespace fracframes::basis2d {

/// Zernike index (n, m, j): total degree n, Fourier mode m, sign bit j.
struct ZernikeIndex {
  int n = 0;
  int m = 0;
  int j = 1;

  void validate() const;
  /// Degree of the radial Jacobi factor, (n - m) / 2.
  [[nodiscard]] int radial_degree() const noexcept { return (n - m) / 2; }
};

/// Radial dilation: a family is evaluated at (factor x, factor y).
struct RadialScale {
  double factor = 1.0;

  RadialScale() = default;
  explicit RadialScale(double f);
  bool operator==(const RadialScale&) const = default;
};

inline constexpr double kSingularRadiusGuard = 1e-12;

/// V_{m,j}(x, y) = r^m sin(m theta + j pi / 2).
double angular_factor(int m, int j, double x, double y);

/// Z^{(b)}_{n,m,j}(x, y) = V_{m,j} P^{(b,m)}_{(n-m)/2}(2 r^2 - 1).
double zernike_z(const ZernikeIndex& idx, double b, double x, double y);

/// W^{(b)}_{n,m,j} = (1 - r^2)_+^b Z^{(b)}_{n,m,j}; zero for r >= 1.
double weighted_w(const ZernikeIndex& idx, double b, double x, double y);

/// Ztilde^{(s,s)}_{n,m,j} = (-Delta)^s W^{(s)}_{n,m,j}, for r != 1 and s in (-1, 1).
double extended_z(const ZernikeIndex& idx, double s, double x, double y);

/// Radial profiles with the r^m factor included but without the trigonometric
/// factor: rows are radii, columns radial degrees k = 0..k_max.
Eigen::MatrixXd weighted_w_radial(int k_max, int m, double b, std::span<const double> radii);
Eigen::MatrixXd extended_z_radial(int k_max, int m, double s, std::span<const double> radii);

}  // namespace fracframes::basis2d

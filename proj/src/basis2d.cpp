#include "fracframes/basis2d.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include <boost/math/special_functions/sin_pi.hpp>

#include "fracframes/basis1d.hpp"
#include "fracframes/error.hpp"
#include "fracframes/specfun.hpp"

namespace fracframes::basis2d {

namespace {

using specfun::gamma_ratio;

void check_b(double b) {
  if (!(b > -1.0)) {
    std::ostringstream os;
    os << "Zernike weight exponent must exceed -1, got " << b;
    throw ParameterError(os.str());
  }
}

void check_s(double s) {
  if (!(s > -1.0 && s < 1.0) || s == 0.0) {
    std::ostringstream os;
    os << "extended Zernike exponent must lie in (-1, 1) \\ {0}, got " << s;
    throw ParameterError(os.str());
  }
}

void check_radius(double r) {
  if (std::abs(r - 1.0) <= kSingularRadiusGuard) {
    std::ostringstream os;
    os.precision(17);
    os << "extended Zernike function is singular at r = 1 (r = " << r << ")";
    throw SingularPointError(os.str());
  }
}

// 4^s Gamma(1+s+k) Gamma(1+m+k+s) / (k! Gamma(1+k+m))
double inner_constant(int k, int m, double s) {
  return std::pow(4.0, s) * gamma_ratio({1.0 + s + k, 1.0 + m + k + s}, {k + 1.0, 1.0 + k + m});
}

// 4^s Gamma(1+s+k)/k! * (-1)^k Gamma(1+m+k+s) / (Gamma(-k-s) Gamma(s+m+2k+2)),
// with (-1)^k / Gamma(-k-s) = -sin(pi s) Gamma(1+k+s) / pi.
double outer_constant(int k, int m, double s) {
  return -std::pow(4.0, s) * boost::math::sin_pi(s) / std::numbers::pi *
         gamma_ratio({1.0 + s + k, 1.0 + s + k, 1.0 + m + k + s}, {k + 1.0, s + m + 2.0 * k + 2.0});
}

double outer_radial(int k, int m, double s, double r) {
  const double z = 1.0 / (r * r);
  const double f = specfun::hyp2f1(k + s + 1.0, 1.0 + m + k + s, s + m + 2.0 * k + 2.0, z);
  return outer_constant(k, m, s) * std::pow(r, m) * f * std::pow(r, -2.0 * (1.0 + m + k + s));
}

}  // namespace

void ZernikeIndex::validate() const {
  std::ostringstream os;
  if (n < 0 || m < 0 || m > n || (n - m) % 2 != 0) {
    os << "ZernikeIndex: need 0 <= m <= n with n - m even, got (n=" << n << ", m=" << m << ")";
    throw ParameterError(os.str());
  }
  if (j != 0 && j != 1) {
    os << "ZernikeIndex: j must be 0 or 1, got " << j;
    throw ParameterError(os.str());
  }
  if (m == 0 && j != 1) throw ParameterError("ZernikeIndex: m = 0 requires j = 1");
}

RadialScale::RadialScale(double f) : factor(f) {
  if (!(f > 0.0) || !std::isfinite(f)) {
    std::ostringstream os;
    os << "RadialScale: factor must be positive, got " << f;
    throw ParameterError(os.str());
  }
}

double angular_factor(int m, int j, double x, double y) {
  if (m == 0) return j == 1 ? 1.0 : 0.0;
  const double r = std::hypot(x, y);
  const double theta = std::atan2(y, x);
  const double trig = j == 1 ? std::cos(m * theta) : std::sin(m * theta);
  return std::pow(r, m) * trig;
}

double zernike_z(const ZernikeIndex& idx, double b, double x, double y) {
  idx.validate();
  check_b(b);
  const double r2 = x * x + y * y;
  return angular_factor(idx.m, idx.j, x, y) *
         basis1d::jacobi_p(idx.radial_degree(), {b, static_cast<double>(idx.m)}, 2.0 * r2 - 1.0);
}

double weighted_w(const ZernikeIndex& idx, double b, double x, double y) {
  idx.validate();
  check_b(b);
  const double r2 = x * x + y * y;
  if (r2 >= 1.0) return 0.0;
  return std::pow(1.0 - r2, b) * zernike_z(idx, b, x, y);
}

double extended_z(const ZernikeIndex& idx, double s, double x, double y) {
  idx.validate();
  check_s(s);
  const double r = std::hypot(x, y);
  check_radius(r);
  const int k = idx.radial_degree();
  const int m = idx.m;
  if (r < 1.0) {
    return angular_factor(m, idx.j, x, y) * inner_constant(k, m, s) *
           basis1d::jacobi_p(k, {s, static_cast<double>(m)}, 2.0 * r * r - 1.0);
  }
  const double trig = m == 0 ? 1.0 : angular_factor(m, idx.j, x, y) / std::pow(r, m);
  return trig * outer_radial(k, m, s, r);
}

Eigen::MatrixXd weighted_w_radial(int k_max, int m, double b, std::span<const double> radii) {
  if (k_max < 0 || m < 0) throw ParameterError("weighted_w_radial: negative degree or mode");
  check_b(b);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(radii.size()), k_max + 1);
  std::vector<double> buf(k_max + 1);
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const double r = radii[i];
    if (r >= 1.0) continue;
    basis1d::jacobi_p_all(k_max, {b, static_cast<double>(m)}, 2.0 * r * r - 1.0, buf);
    const double w = std::pow(1.0 - r * r, b) * std::pow(r, m);
    for (int k = 0; k <= k_max; ++k) out(static_cast<Eigen::Index>(i), k) = w * buf[k];
  }
  return out;
}

Eigen::MatrixXd extended_z_radial(int k_max, int m, double s, std::span<const double> radii) {
  if (k_max < 0 || m < 0) throw ParameterError("extended_z_radial: negative degree or mode");
  check_s(s);
  Eigen::MatrixXd out(static_cast<Eigen::Index>(radii.size()), k_max + 1);
  std::vector<double> consts(k_max + 1);
  for (int k = 0; k <= k_max; ++k) consts[k] = inner_constant(k, m, s);
  std::vector<double> buf(k_max + 1);
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const double r = radii[i];
    check_radius(r);
    const auto row = static_cast<Eigen::Index>(i);
    if (r < 1.0) {
      basis1d::jacobi_p_all(k_max, {s, static_cast<double>(m)}, 2.0 * r * r - 1.0, buf);
      const double rm = std::pow(r, m);
      for (int k = 0; k <= k_max; ++k) out(row, k) = rm * consts[k] * buf[k];
    } else {
      for (int k = 0; k <= k_max; ++k) out(row, k) = outer_radial(k, m, s, r);
    }
  }
  return out;
}

}  // namespace fracframes::basis2d

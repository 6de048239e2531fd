#include "fracframes/basis1d.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <boost/math/special_functions/sin_pi.hpp>

#include "fracframes/error.hpp"
#include "fracframes/specfun.hpp"

namespace fracframes::basis1d {

namespace {

using specfun::gamma_ratio;
using specfun::hyp2f1;

// Floor bookkeeping shared by both branches of the closed form:
// half = floor(n/2), parity = n - 2 floor(n/2), half_lower = floor((n-1)/2).
struct DegreeSplit {
  int half;
  int parity;
  int half_lower;
};

constexpr DegreeSplit split(int n) noexcept {
  const int half = n / 2;
  return {half, n - 2 * half, n == 0 ? -1 : (n - 1) / 2};
}

bool is_minus_half(double s) noexcept { return std::abs(s + 0.5) <= 1e-14; }

void check_not_singular(double x) {
  if (std::abs(std::abs(x) - 1.0) <= kSingularGuard) {
    std::ostringstream os;
    os.precision(17);
    os << "extended Jacobi function is singular at |x| = 1 (x = " << x << ")";
    throw SingularPointError(os.str());
  }
}

// |x| < 1, general weight. The sine and Gamma(1/2 - s - (n - floor(n/2)))
// factors of the denominator collapse by reflection to
// (-1)^floor(n/2) pi / Gamma(n - floor(n/2) + s + 1/2).
double inside_general(int n, double a, double s, double x) {
  const auto [k, p, q] = split(n);
  (void)q;
  const double pref = std::pow(4.0, s) * ((k % 2 == 0) ? 1.0 : -1.0) *
                      gamma_ratio({a + n + 1.0, n - k + s + 0.5}, {n + 1.0, p + 0.5, a - s + k + 1.0});
  if (pref == 0.0) return 0.0;
  const double xp = p == 1 ? x : 1.0;
  return pref * xp * hyp2f1(-a + s - k, n - k + s + 0.5, p + 0.5, x * x);
}

double outside(int n, double a, double s, double x) {
  const auto [k, p, q] = split(n);
  const double ax = std::abs(x);
  const double pref = -std::exp2(-n) * boost::math::sin_pi(s) / std::sqrt(std::numbers::pi) *
                      gamma_ratio({a + n + 1.0, n + 2.0 * s + 1.0}, {n + 1.0, n + 1.5 + a});
  const double xp = p == 1 ? (x < 0 ? -1.0 : 1.0) : 1.0;
  // x^p |x|^{-2q-2s-3}, written as sign * |x|^{p-2q-2s-3}
  const double power = std::pow(ax, p - 2.0 * q - 2.0 * s - 3.0);
  return pref * xp * power * hyp2f1(s + k + 1.0, q + 1.5 + s, n + 1.5 + a, 1.0 / (x * x));
}

}  // namespace

Interval::Interval(double left, double right) : a(left), b(right) {
  if (!(left < right) || !std::isfinite(left) || !std::isfinite(right)) {
    std::ostringstream os;
    os << "Interval: need finite a < b, got [" << left << ", " << right << "]";
    throw ParameterError(os.str());
  }
}

void JacobiParams::validate() const {
  if (!(a > -1.0) || !(b > -1.0)) {
    std::ostringstream os;
    os << "JacobiParams: need a, b > -1, got (" << a << ", " << b << ")";
    throw ParameterError(os.str());
  }
}

void ExtendedParams::validate(int n) const {
  std::ostringstream os;
  if (!(a > -1.0)) {
    os << "ExtendedParams: need a > -1, got " << a;
    throw ParameterError(os.str());
  }
  if (n < 0) throw ParameterError("ExtendedParams: negative degree");
  const bool open_range = (s > -0.5 && s < 0.0) || (s > 0.0 && s < 1.0);
  if (open_range) return;
  if (is_minus_half(s) && n >= 1) return;
  os << "ExtendedParams: s = " << s << " outside (-1/2, 0) U (0, 1)";
  if (is_minus_half(s)) os << " (s = -1/2 needs degree >= 1, got " << n << ")";
  throw ParameterError(os.str());
}

bool ExtendedParams::matched() const noexcept { return std::abs(a - s) <= 1e-14; }

double jacobi_p(int n, const JacobiParams& params, double x) {
  if (n == 0) return 1.0;
  std::vector<double> buf(static_cast<std::size_t>(n) + 1);
  jacobi_p_all(n, params, x, buf);
  return buf.back();
}

void jacobi_p_all(int n_max, const JacobiParams& params, double x, std::span<double> out) {
  const double a = params.a;
  const double b = params.b;
  out[0] = 1.0;
  if (n_max == 0) return;
  out[1] = 0.5 * (a - b + (a + b + 2.0) * x);
  for (int k = 1; k < n_max; ++k) {
    const double s = 2.0 * k + a + b;
    const double lead = 2.0 * (k + 1) * (k + a + b + 1.0) * s;
    const double mid = (s + 1.0) * ((s + 2.0) * s * x + a * a - b * b);
    const double back = 2.0 * (k + a) * (k + b) * (s + 2.0);
    out[k + 1] = (mid * out[k] - back * out[k - 1]) / lead;
  }
}

double weighted_q(int n, const JacobiParams& params, double x) {
  if (std::abs(x) >= 1.0) return 0.0;
  return std::pow(1.0 - x, params.a) * std::pow(1.0 + x, params.b) * jacobi_p(n, params, x);
}

double scaled_jacobi_constant(int n, double s) {
  const int k = n / 2;
  return std::pow(4.0, s) * gamma_ratio({s + k + 1.0, n - k + s + 0.5}, {k + 1.0, n - k + 0.5});
}

double extended_p(int n, const ExtendedParams& params, double x) {
  params.validate(n);
  check_not_singular(x);
  if (std::abs(x) > 1.0) return outside(n, params.a, params.s, x);
  if (params.matched()) {
    return scaled_jacobi_constant(n, params.s) * jacobi_p(n, {params.s, params.s}, x);
  }
  return inside_general(n, params.a, params.s, x);
}

Eigen::MatrixXd extended_p_batch(int n_max, const ExtendedParams& params, std::span<const double> xs) {
  if (n_max < 0) throw ParameterError("extended_p_batch: negative degree");
  const bool from_one = is_minus_half(params.s);
  params.validate(from_one ? std::max(n_max, 1) : 0);
  const double a = params.a;
  const double s = params.s;
  const auto rows = static_cast<Eigen::Index>(xs.size());
  Eigen::MatrixXd out(rows, n_max + 1);

  std::vector<double> consts;
  if (params.matched()) {
    consts.resize(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
      consts[n] = (from_one && n == 0) ? std::numeric_limits<double>::quiet_NaN()
                                       : scaled_jacobi_constant(n, s);
    }
  }
  std::vector<double> buf(n_max + 1);

  for (Eigen::Index i = 0; i < rows; ++i) {
    const double x = xs[i];
    check_not_singular(x);
    if (std::abs(x) > 1.0) {
      for (int n = 0; n <= n_max; ++n) {
        out(i, n) = (from_one && n == 0) ? std::numeric_limits<double>::quiet_NaN()
                                         : outside(n, a, s, x);
      }
      continue;
    }
    if (params.matched()) {
      jacobi_p_all(n_max, {s, s}, x, buf);
      for (int n = 0; n <= n_max; ++n) out(i, n) = consts[n] * buf[n];
      continue;
    }
    // x Pt_n = A_n Pt_{n+1} + C_n Pt_{n-1}: the symmetric Jacobi recurrence with
    // the up/down coefficients rescaled by (n+2a+1-2s)/(n+2a+1) and (n+2s)/n.
    // With s = -1/2 degree 0 is undefined, so the seeds are degrees 1 and 2.
    const int first = from_one ? 1 : 0;
    double prev = n_max >= first ? inside_general(first, a, s, x) : 0.0;
    double curr = n_max >= first + 1 ? inside_general(first + 1, a, s, x) : 0.0;
    if (from_one) out(i, 0) = std::numeric_limits<double>::quiet_NaN();
    if (n_max >= first) out(i, first) = prev;
    if (n_max >= first + 1) out(i, first + 1) = curr;
    for (int n = first + 1; n < n_max; ++n) {
      const double up = (n + 1.0) * (n + 2.0 * a + 1.0 - 2.0 * s) / ((2.0 * n + 2.0 * a + 1.0) * (n + a + 1.0));
      const double down = (n + a) * (n + 2.0 * s) / ((2.0 * n + 2.0 * a + 1.0) * n);
      double next;
      if (std::abs(up) < 1e-300) {
        next = inside_general(n + 1, a, s, x);
      } else {
        next = (x * curr - down * prev) / up;
      }
      out(i, n + 1) = next;
      prev = curr;
      curr = next;
    }
  }
  return out;
}

}  // namespace fracframes::basis1d

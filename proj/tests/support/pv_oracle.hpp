#pragma once

// (-Delta)^s f(x) straight from the principal-value integral, in the symmetric
// second-difference form
//   c(s) * int_0^inf (2 f(x) - f(x + h) - f(x - h)) / h^{1 + 2s} dh,
// split at every h where x +- h hits a kink of f.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "fracframes/error.hpp"
#include "fracframes/specfun.hpp"

namespace oracle {

inline double frac_lap_constant_1d(double s) {
  return std::pow(4.0, s) * std::tgamma(0.5 + s) / (std::sqrt(std::numbers::pi) * std::abs(std::tgamma(-s)));
}

/// f evaluated where defined; points where f refuses (singular) count as 0,
/// which is harmless for integrable endpoint singularities.
inline double safe(const std::function<double(double)>& f, double y) {
  try {
    const double v = f(y);
    return std::isfinite(v) ? v : 0.0;
  } catch (const fracframes::SingularPointError&) {
    return 0.0;
  }
}

/// kinks: locations y where f is not smooth. support: when set, f vanishes
/// outside [-support, support] and the tail is integrated in closed form.
inline double frac_lap_pv(const std::function<double(double)>& f, double s, double x, const std::vector<double>& kinks,
                          std::optional<double> support = std::nullopt) {
  std::vector<double> br{0.0};
  for (double k : kinks) {
    const double d = std::abs(k - x);
    if (d > 0.0) br.push_back(d);
  }
  std::sort(br.begin(), br.end());
  br.erase(std::unique(br.begin(), br.end()), br.end());
  const double fx = safe(f, x);
  auto g = [&](double h) {
    if (h <= 0.0) return 0.0;
    const double num = 2.0 * fx - safe(f, x + h) - safe(f, x - h);
    if (num == 0.0) return 0.0;
    const double v = num / std::pow(h, 1.0 + 2.0 * s);
    return std::isfinite(v) ? v : 0.0;
  };
  boost::math::quadrature::tanh_sinh<double> ts(15);
  double total = 0.0;
  // Near h = 0 the second difference cancels; integrate h^{1-2s} * (num / h^2)
  // with a Gauss-Jacobi rule on [0, b/2] so no node sits close to 0.
  const double b = br.size() > 1 ? br[1] : 1.0;
  const double mid = 0.5 * b;
  const fracframes::specfun::QuadRule gj = fracframes::specfun::gauss_jacobi(60, 0.0, 1.0 - 2.0 * s);
  const double scale = std::pow(0.5 * mid, 2.0 - 2.0 * s);
  for (std::size_t k = 0; k < gj.size(); ++k) {
    const double h = 0.5 * mid * (1.0 + gj.nodes[k]);
    const double num = 2.0 * fx - safe(f, x + h) - safe(f, x - h);
    total += gj.weights[k] * scale * num / (h * h);
  }
  if (br.size() == 1) br.push_back(b);
  br[0] = mid;
  for (std::size_t i = 0; i + 1 < br.size(); ++i) total += ts.integrate(g, br[i], br[i + 1], 1e-13);
  const double last = br.back();
  if (support) {
    const double edge = std::max(std::abs(x - *support), std::abs(x + *support));
    if (edge > last) total += ts.integrate(g, last, edge, 1e-13);
    const double from = std::max(edge, last);
    if (from > 0.0) total += 2.0 * fx * std::pow(from, -2.0 * s) / (2.0 * s);
  } else {
    boost::math::quadrature::exp_sinh<double> es(12);
    const double from = last > 0.0 ? last : 1.0;
    if (last == 0.0) total += ts.integrate(g, 0.0, 1.0, 1e-13);
    total += es.integrate([&](double u) { return g(from + u); }, 0.0, std::numeric_limits<double>::infinity(), 1e-12);
  }
  return frac_lap_constant_1d(s) * total;
}

}  // namespace oracle

#include "fracframes/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <boost/math/special_functions/digamma.hpp>

#include "fracframes/error.hpp"

namespace fracframes::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxSeriesTerms = 5000;
constexpr int kMaxPositiveTerms = 200000;

std::string describe(double a, double b, double c, double z) {
  std::ostringstream os;
  os.precision(17);
  os << "(a=" << a << ", b=" << b << ", c=" << c << ", z=" << z << ")";
  return os.str();
}

struct SeriesResult {
  double sum;
  double peak;  // largest |term| seen, for a cancellation estimate
};

// Power series sum_k (a)_k (b)_k / ((c)_k k!) z^k. Callers guarantee |z| < 1
// or a terminating parameter, and that c is not a pole before termination.
// Accumulated in long double: with large negative parameters the terms
// cancel by several orders of magnitude.
SeriesResult hyp2f1_series_tracked(double a, double b, double c, double z, int max_terms = kMaxSeriesTerms) {
  using ld = long double;
  ld term = 1.0L;
  ld sum = 1.0L;
  ld peak = 1.0L;
  const double settle = std::max(std::abs(a), std::abs(b)) + 2.0;
  for (int k = 0; k < max_terms; ++k) {
    const ld ratio = (ld(a) + k) * (ld(b) + k) / ((ld(c) + k) * (k + 1.0L)) * ld(z);
    term *= ratio;
    sum += term;
    peak = std::max(peak, std::abs(term));
    if (term == 0.0L) return {double(sum), double(peak)};
    if (k > settle && std::abs(term) <= ld(kEps) * 0.25L * std::abs(sum) && std::abs(ratio) < 1.0L) {
      return {double(sum), double(peak)};
    }
  }
  throw ConvergenceError("hyp2f1 power series did not converge " + describe(a, b, c, z));
}

double hyp2f1_series(double a, double b, double c, double z) { return hyp2f1_series_tracked(a, b, c, z).sum; }

double cancellation(const SeriesResult& r) {
  return r.sum == 0.0 ? std::numeric_limits<double>::infinity() : r.peak / std::abs(r.sum);
}

// |z| <= switch. When the direct series cancels, try Euler's transformation
// and, where it stays in the series domain, Pfaff's; keep the best conditioned.
double hyp2f1_small(double a, double b, double c, double z) {
  const SeriesResult direct = hyp2f1_series_tracked(a, b, c, z);
  double best = direct.sum;
  double best_cond = cancellation(direct);
  if (best_cond <= 1e2) return best;
  auto consider = [&](double pre, double aa, double bb, double zz) {
    if (std::abs(zz) > kHyp2f1Switch) return;
    double value;
    double cond;
    if (is_nonpositive_integer(aa) || is_nonpositive_integer(bb)) {
      const double t = is_nonpositive_integer(aa) ? aa : bb;
      const double o = is_nonpositive_integer(aa) ? bb : aa;
      const int degree = static_cast<int>(-t);
      double term = 1.0;
      double sum = 1.0;
      double peak = 1.0;
      for (int k = 0; k < degree; ++k) {
        term *= (t + k) * (o + k) / ((c + k) * (k + 1.0)) * zz;
        sum += term;
        peak = std::max(peak, std::abs(term));
      }
      value = sum;
      cond = sum == 0.0 ? std::numeric_limits<double>::infinity() : peak / std::abs(sum);
    } else {
      const SeriesResult r = hyp2f1_series_tracked(aa, bb, c, zz);
      value = r.sum;
      cond = cancellation(r);
    }
    if (cond < best_cond) {
      best_cond = cond;
      best = pre * value;
    }
  };
  const double w = 1.0 - z;
  consider(std::pow(w, c - a - b), c - a, c - b, z);
  consider(std::pow(w, -a), a, c - b, z / (z - 1.0));
  consider(std::pow(w, -b), b, c - a, z / (z - 1.0));
  return best;
}

// Largest coefficient of the logarithmic connection series; a proxy for the
// cancellation it suffers when a b (1-z) is large.
double connection_peak(double a, double b, double z) {
  const double w = 1.0 - z;
  double coef = 1.0;
  double peak = 1.0;
  for (int k = 0; k < kMaxSeriesTerms; ++k) {
    const double ratio = (a + k) * (b + k) / ((k + 1.0) * (k + 1.0)) * w;
    if (ratio < 1.0) break;
    coef *= ratio;
    peak = std::max(peak, coef);
  }
  return peak;
}

double hyp2f1_terminating(double a, double b, double c, double z) {
  // a is the terminating parameter (nonpositive integer).
  const int degree = static_cast<int>(-a);
  if (is_nonpositive_integer(c) && -c < degree) {
    throw PoleError("hyp2f1 terminating series hits a pole in c " + describe(a, b, c, z));
  }
  long double term = 1.0L;
  long double sum = 1.0L;
  for (int k = 0; k < degree; ++k) {
    term *= ((long double)a + k) * ((long double)b + k) / (((long double)c + k) * (k + 1.0L)) * z;
    sum += term;
  }
  return double(sum);
}

// Connection formula z -> 1-z when c-a-b = m is an integer (m >= 0), in the
// logarithmic limit form. Uses c = a+b+m exactly.
double hyp2f1_log_connection(double a, double b, int m, double z) {
  const double w = 1.0 - z;
  const double c = a + b + m;
  double finite_part = 0.0;
  if (m > 0) {
    // sum_{k<m} (a)_k (b)_k (m-k-1)!/k! (z-1)^k / (Gamma(a+m) Gamma(b+m))
    double poch = 1.0;  // (a)_k (b)_k / k!
    double zm1k = 1.0;
    for (int k = 0; k < m; ++k) {
      finite_part += poch * std::tgamma(static_cast<double>(m - k)) * zm1k;
      poch *= (a + k) * (b + k) / (k + 1.0);
      zm1k *= (z - 1.0);
    }
    finite_part *= rgamma(a + m) * rgamma(b + m);
  }
  // sum_k (a+m)_k (b+m)_k/(k!(k+m)!) w^k [ln w + psi(a+k+m) + psi(b+k+m) - psi(1+k) - psi(1+k+m)]
  const double logw = std::log(w);
  double psi_a = boost::math::digamma(a + m);
  double psi_b = boost::math::digamma(b + m);
  double psi_1 = boost::math::digamma(1.0);
  double psi_1m = boost::math::digamma(1.0 + m);
  double coef = 1.0 / std::tgamma(m + 1.0);
  double sum = 0.0;
  const double settle = std::max(std::abs(a), std::abs(b)) + m + 2.0;
  bool converged = false;
  for (int k = 0; k < kMaxSeriesTerms; ++k) {
    const double term = coef * (logw + psi_a + psi_b - psi_1 - psi_1m);
    sum += term;
    if (k > settle && std::abs(term) <= kEps * 0.25 * std::abs(sum)) {
      converged = true;
      break;
    }
    coef *= (a + m + k) * (b + m + k) / ((k + 1.0) * (k + 1.0 + m)) * w;
    psi_a += 1.0 / (a + m + k);
    psi_b += 1.0 / (b + m + k);
    psi_1 += 1.0 / (1.0 + k);
    psi_1m += 1.0 / (1.0 + k + m);
  }
  if (!converged) {
    throw ConvergenceError("hyp2f1 logarithmic connection series did not converge " +
                           describe(a, b, c, z));
  }
  const double log_part = std::pow(z - 1.0, m) * rgamma(a) * rgamma(b) * sum;
  return gamma_fn(c) * (finite_part - log_part);
}

double hyp2f1_one_minus_z(double a, double b, double c, double z) {
  const double w = 1.0 - z;
  const double gap = c - a - b;
  const double m = std::round(gap);
  if (std::abs(gap - m) <= kDegenerateTol) {
    if (m >= 0) return hyp2f1_log_connection(a, b, static_cast<int>(m), z);
    // Euler: F(a,b;c;z) = w^{c-a-b} F(c-a, c-b; c; z), whose gap is -m > 0.
    return std::pow(w, gap) * hyp2f1_log_connection(c - a, c - b, static_cast<int>(-m), z);
  }
  const double first = gamma_ratio({c, gap}, {c - a, c - b});
  const double second = gamma_ratio({c, -gap}, {a, b});
  double value = 0.0;
  if (first != 0.0) value += first * hyp2f1_series(a, b, 1.0 - gap, w);
  if (second != 0.0) value += second * std::pow(w, gap) * hyp2f1_series(c - a, c - b, 1.0 + gap, w);
  return value;
}

double hyp1f1_series(double a, double b, double z) {
  double term = 1.0;
  double sum = 1.0;
  const double settle = std::abs(a) + 2.0;
  for (int k = 0; k < kMaxSeriesTerms; ++k) {
    const double ratio = (a + k) / ((b + k) * (k + 1.0)) * z;
    term *= ratio;
    sum += term;
    if (term == 0.0) return sum;
    if (k > settle && std::abs(term) <= kEps * 0.25 * std::abs(sum) && std::abs(ratio) < 1.0) {
      return sum;
    }
  }
  std::ostringstream os;
  os << "hyp1f1 series did not converge (a=" << a << ", b=" << b << ", z=" << z << ")";
  throw ConvergenceError(os.str());
}

// z -> -inf: Gamma(b) / Gamma(b-a) (-z)^{-a} sum (a)_k (a-b+1)_k / k! (-z)^{-k};
// the e^z companion term is below double precision for -z > kHyp1f1Asymptotic.
double hyp1f1_negative_asymptotic(double a, double b, double z) {
  const double w = -z;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < 200; ++k) {
    const double next = term * (a + k) * (a - b + 1.0 + k) / ((k + 1.0) * w);
    if (std::abs(next) > std::abs(term)) break;
    term = next;
    sum += term;
    if (std::abs(term) <= kEps * 0.25 * std::abs(sum)) {
      return gamma_ratio({b}, {b - a}) * std::pow(w, -a) * sum;
    }
  }
  std::ostringstream os;
  os << "hyp1f1 asymptotic series did not converge (a=" << a << ", b=" << b << ", z=" << z << ")";
  throw ConvergenceError(os.str());
}

}  // namespace

bool is_nonpositive_integer(double x) noexcept { return x <= 0.0 && x == std::floor(x); }

double gamma_fn(double x) {
  if (is_nonpositive_integer(x)) {
    std::ostringstream os;
    os << "gamma_fn: pole at x = " << x;
    throw PoleError(os.str());
  }
  return std::tgamma(x);
}

double rgamma(double x) noexcept {
  if (is_nonpositive_integer(x)) return 0.0;
  if (x > 171.0) return std::exp(-std::lgamma(x));
  return 1.0 / std::tgamma(x);
}

double gamma_ratio(std::initializer_list<double> num, std::initializer_list<double> den) {
  for (double d : den) {
    if (is_nonpositive_integer(d)) return 0.0;
  }
  for (double n : num) {
    if (is_nonpositive_integer(n)) {
      std::ostringstream os;
      os << "gamma_ratio: pole in numerator at " << n;
      throw PoleError(os.str());
    }
  }
  // Direct product, interleaving numerator and denominator factors.
  double direct = 1.0;
  auto ni = num.begin();
  auto di = den.begin();
  while (ni != num.end() || di != den.end()) {
    if (ni != num.end()) direct *= std::tgamma(*ni++);
    if (di != den.end()) direct /= std::tgamma(*di++);
  }
  if (std::isfinite(direct) && direct != 0.0) return direct;

  double log_mag = 0.0;
  int sign = 1;
  for (double n : num) {
    int sg = 1;
    log_mag += ::lgamma_r(n, &sg);
    sign *= sg;
  }
  for (double d : den) {
    int sg = 1;
    log_mag -= ::lgamma_r(d, &sg);
    sign *= sg;
  }
  return sign * std::exp(log_mag);
}

double hyp2f1(double a, double b, double c, double z) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(z)) {
    throw ParameterError("hyp2f1: non-finite argument " + describe(a, b, c, z));
  }
  if (z == 0.0) return 1.0;
  const bool a_term = is_nonpositive_integer(a);
  const bool b_term = is_nonpositive_integer(b);
  if (a_term || b_term) {
    if (a_term && b_term) {
      return a >= b ? hyp2f1_terminating(a, b, c, z) : hyp2f1_terminating(b, a, c, z);
    }
    return a_term ? hyp2f1_terminating(a, b, c, z) : hyp2f1_terminating(b, a, c, z);
  }
  if (is_nonpositive_integer(c)) {
    throw PoleError("hyp2f1: c is a nonpositive integer " + describe(a, b, c, z));
  }
  if (z > 1.0) {
    throw ParameterError("hyp2f1: z > 1 has no real value for a non-terminating series " +
                         describe(a, b, c, z));
  }
  if (z == 1.0) {
    if (c - a - b <= 0.0) {
      throw ParameterError("hyp2f1: divergent at z = 1 since c-a-b <= 0 " + describe(a, b, c, z));
    }
    return gamma_ratio({c, c - a - b}, {c - a, c - b});
  }
  if (std::abs(z) <= kHyp2f1Switch) return hyp2f1_small(a, b, c, z);
  if (z < 0.0) {
    // Pfaff: F(a,b;c;z) = (1-z)^{-a} F(a, c-b; c; z/(z-1)); pick the
    // parameter that keeps the transformed series terminating when possible.
    const double w = z / (z - 1.0);
    if (is_nonpositive_integer(c - a)) return std::pow(1.0 - z, -b) * hyp2f1(b, c - a, c, w);
    return std::pow(1.0 - z, -a) * hyp2f1(a, c - b, c, w);
  }
  if (a > 0.0 && b > 0.0 && c > 0.0 && connection_peak(a, b, z) > 1e2) {
    // All terms positive: the direct series is accurate, only slow.
    return hyp2f1_series_tracked(a, b, c, z, kMaxPositiveTerms).sum;
  }
  return hyp2f1_one_minus_z(a, b, c, z);
}

double hyp1f1(double a, double b, double z) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(z)) {
    throw ParameterError("hyp1f1: non-finite argument");
  }
  if (is_nonpositive_integer(b)) {
    std::ostringstream os;
    os << "hyp1f1: b = " << b << " is a pole";
    throw PoleError(os.str());
  }
  if (z == 0.0) return 1.0;
  if (is_nonpositive_integer(a)) {
    const int degree = static_cast<int>(-a);
    double term = 1.0;
    double sum = 1.0;
    for (int k = 0; k < degree; ++k) {
      term *= (a + k) / ((b + k) * (k + 1.0)) * z;
      sum += term;
    }
    return sum;
  }
  if (a == b) return std::exp(z);
  if (z < -kHyp1f1Asymptotic) return hyp1f1_negative_asymptotic(a, b, z);
  if (z < 0.0) return std::exp(z) * hyp1f1(b - a, b, -z);
  return hyp1f1_series(a, b, z);
}

}  // namespace fracframes::specfun

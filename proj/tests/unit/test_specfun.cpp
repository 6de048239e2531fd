#include <cmath>
#include <tuple>
#include <utility>
#include <random>

#include <doctest.h>

#include "fracframes/error.hpp"
#include "fracframes/specfun.hpp"

using namespace fracframes;
using namespace fracframes::specfun;

namespace {

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST_SUITE("specfun") {

TEST_CASE("gamma against reference values") {
  CHECK(rel(gamma_fn(-0.5), -3.5449077018110320546) < 1e-14);
  CHECK(rel(gamma_fn(0.5), std::sqrt(M_PI)) < 1e-15);
  CHECK(gamma_fn(6.0) == doctest::Approx(120.0).epsilon(1e-15));
  CHECK_THROWS_AS(gamma_fn(-3.0), PoleError);
  CHECK(rgamma(-2.0) == 0.0);
}

TEST_CASE("gamma recurrence on random arguments") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    double x = dist(rng);
    if (std::abs(x - std::round(x)) < 1e-3) continue;
    worst = std::max(worst, rel(gamma_fn(x + 1.0), x * gamma_fn(x)));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("gamma ratio avoids overflow") {
  const double r = gamma_ratio({200.5}, {200.0});
  CHECK(rel(r, std::sqrt(200.0) * (1.0 - 1.0 / 1600.0 + 1.0 / 5120000.0)) < 1e-8);
  CHECK(gamma_ratio({1.5}, {-2.0}) == 0.0);
  CHECK_THROWS_AS(gamma_ratio({-1.0}, {2.0}), PoleError);
}

TEST_CASE("hyp2f1 against reference values") {
  struct Case {
    double a, b, c, z, want, tol;
  };
  const Case cases[] = {
      {0.25, 0.75, 1.5, 0.9, 1.2326775139086117622, 1e-13},
      {0.25, 0.75, 1.5, 0.5, 1.0823922002923939688, 1e-14},
      {1.5, 2.25, 0.5, 0.999, 25285677687.183973393, 1e-11},
      {0.3, 0.7, 2.0, 0.95, 1.1879891320025153173, 1e-12},
      {0.3, 0.7, 1.0, 0.8, 1.3622727890143643481, 1e-12},
      {1.3, 1.7, 1.0, 0.9, 120.12860312169990772, 1e-12},
      {0.5, 1.25, 2.5, -3.0, 0.66124990224336857536, 1e-14},
      {0.5, 1.25, 2.5, -0.8, 0.85279764931254716534, 1e-14},
      {12.5, 13.25, 27.75, 0.85, 4733.2770774854770744, 1e-11},
      {-7.75, 8.5, 0.5, 0.6, -0.37412177089164110014, 1e-11},
      {2.0, 3.0, 5.5, 1.0, 21.0, 1e-13},
  };
  for (const auto& c : cases) {
    CAPTURE(c.a);
    CAPTURE(c.b);
    CAPTURE(c.c);
    CAPTURE(c.z);
    CHECK(rel(hyp2f1(c.a, c.b, c.c, c.z), c.want) <= c.tol);
  }
}

TEST_CASE("hyp2f1 identities") {
  CHECK(hyp2f1(0.3, -1.7, 2.2, 0.0) == 1.0);
  CHECK(hyp2f1(5.0, 3.0, 0.5, 0.0) == 1.0);
  CHECK(hyp1f1(0.3, 2.2, 0.0) == 1.0);
  double worst = 0.0;
  for (double z : {-5.0, -0.9, -0.3, 0.2, 0.6, 0.75, 0.9, 0.99}) {
    for (auto [a, b, c] : {std::tuple{0.25, 1.75, 2.5}, {1.1, -0.4, 0.7}, {3.5, 0.5, 4.25}}) {
      worst = std::max(worst, rel(hyp2f1(a, b, c, z), hyp2f1(b, a, c, z)));
    }
  }
  CHECK(worst <= 1e-13);
  // terminating: 2F1(-2, b; c; z) = 1 - 2 b z / c + b (b + 1) z^2 / (c (c + 1))
  const double b = 1.5, c = 0.75, z = 3.0;
  CHECK(rel(hyp2f1(-2.0, b, c, z), 1.0 - 2.0 * b * z / c + b * (b + 1.0) * z * z / (c * (c + 1.0))) < 1e-14);
  CHECK_THROWS(hyp2f1(0.5, 0.5, 1.5, 1.5));
}

TEST_CASE("hyp1f1 against reference values") {
  CHECK(rel(hyp1f1(5.0 / 6.0, 0.5, -4.0), -0.18122488010946019674) < 1e-13);
  CHECK(rel(hyp1f1(5.0 / 6.0, 0.5, -100.0), -0.0095068102439614306963) < 1e-13);
  CHECK(rel(hyp1f1(1.5, 1.0, -1.0), 0.15642080318487169714) < 1e-14);
  CHECK(rel(hyp1f1(0.3, 2.2, 150.0), 3.7992828498393805404e+60) < 1e-12);
  CHECK(rel(hyp1f1(-2.5, 1.5, -200.0), 86711.080387430161893) < 1e-12);
  // large negative arguments
  CHECK(rel(hyp1f1(5.0 / 6.0, 0.5, -1000.0), -0.00138127612660948199075445737573) < 1e-13);
  CHECK(rel(hyp1f1(1.5, 1.0, -2500.0), -0.00000225879195970013410990315703068) < 1e-13);
  CHECK(rel(hyp1f1(-0.7, 0.5, -600.0), 170.00420030325838695193781694) < 1e-13);
}

TEST_CASE("quadrature exactness") {
  for (int n : {1, 2, 5, 16, 40}) {
    for (auto [kind, al, be] : {std::tuple{QuadKind::GaussLegendre, 0.0, 0.0},
                                {QuadKind::GaussJacobi, 0.5, 0.5},
                                {QuadKind::GaussJacobi, -1.0 / 3.0, 0.25},
                                {QuadKind::GaussJacobi, 1.5, -0.5}}) {
      const QuadRule q = quad_rule(kind, n, al, be);
      REQUIRE(q.size() == static_cast<std::size_t>(n));
      // moments of (1-x)^al (1+x)^be against (1+x)^k: 2^{al+be+k+1} B(al+1, be+k+1)
      for (int k = 0; k <= 2 * n - 1; ++k) {
        double got = 0.0;
        for (std::size_t i = 0; i < q.size(); ++i) got += q.weights[i] * std::pow(1.0 + q.nodes[i], k);
        const double want = std::pow(2.0, al + be + k + 1.0) * std::exp(std::lgamma(al + 1.0) +
                                                                        std::lgamma(be + k + 1.0) -
                                                                        std::lgamma(al + be + k + 2.0));
        CAPTURE(n);
        CAPTURE(k);
        CHECK(rel(got, want) <= 1e-12);
      }
      CHECK(rel(q.weight_integral(), std::pow(2.0, al + be + 1.0) * std::exp(std::lgamma(al + 1.0) +
                                                                            std::lgamma(be + 1.0) -
                                                                            std::lgamma(al + be + 2.0))) < 1e-13);
    }
  }
}

}  // TEST_SUITE

#include <cmath>
#include <tuple>
#include <utility>
#include <random>
#include <vector>

#include <doctest.h>

#include "../support/pv_oracle.hpp"
#include "fracframes/error.hpp"
#include "fracframes/frame.hpp"

using namespace fracframes;
using namespace fracframes::frame;
using basis1d::Interval;

namespace {

std::vector<BasisFamily> two_interval_families(double s) {
  return {BasisFamily::extended_jacobi(-s, -s, {-1, 0}), BasisFamily::extended_jacobi(-s, -s, {0, 1}),
          BasisFamily::weighted_jacobi(s, {-1, 0}), BasisFamily::weighted_jacobi(s, {0, 1})};
}

}  // namespace

TEST_SUITE("frame") {

TEST_CASE("sum space column order is degree-major, extended first") {
  const SumSpace S(two_interval_families(1.0 / 3.0), 10);
  REQUIRE(S.size() == 10);
  const std::vector<Column> want{{0, 0}, {1, 0}, {2, 0}, {3, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {0, 2}, {1, 2}};
  CHECK(S.columns() == want);
  CHECK(S.count(0) == 3);
  CHECK(S.count(3) == 2);
  CHECK(S.max_degree(2) == 1);
  const SumSpace T = S.truncated(6);
  CHECK(std::equal(T.columns().begin(), T.columns().end(), S.columns().begin()));
}

TEST_CASE("degree offsets delay a family") {
  std::vector<BasisFamily> fams{BasisFamily::extended_jacobi(-0.5, -0.5, {-1, 1}, 1),
                                BasisFamily::weighted_jacobi(0.5, {-1, 1})};
  const SumSpace S(fams, 5);
  const std::vector<Column> want{{1, 0}, {0, 1}, {1, 1}, {0, 2}, {1, 2}};
  CHECK(S.columns() == want);
}

TEST_CASE("ten families with offset one split 250 columns evenly") {
  const double s = 0.5;
  std::vector<Interval> ivs{{-5, -3}, {-3, -1}, {-1, 1}, {1, 3}, {3, 5}};
  std::vector<BasisFamily> fams;
  for (const auto& I : ivs) fams.push_back(BasisFamily::extended_jacobi(-s, -s, I, 1));
  for (const auto& I : ivs) fams.push_back(BasisFamily::weighted_jacobi(s, I));
  const SumSpace S(fams, 250);
  for (int f = 0; f < 10; ++f) CHECK(S.count(f) == 25);
  CHECK(S.max_degree(0) == 25);
  CHECK(S.max_degree(5) == 24);
}

TEST_CASE("family images") {
  const Interval I(1.0, 5.0);
  const ImageTerm q = family_image(BasisFamily::weighted_jacobi(0.3, I), 0.3, 2.0);
  CHECK(q.family.kind == FamilyKind::ExtendedJacobi);
  CHECK(q.family.s == 0.3);
  CHECK(q.coeff == doctest::Approx(2.0 * std::pow(2.0, -0.6)).epsilon(1e-15));

  const ImageTerm back = family_image(BasisFamily::extended_jacobi(0.3, -0.3, I), 0.3);
  CHECK(back.family.kind == FamilyKind::WeightedJacobi);

  const ImageTerm id = family_image(BasisFamily::weighted_jacobi(0.3, I), 0.0, 1.5);
  CHECK(id.coeff == 1.5);
  CHECK(id.family == BasisFamily::weighted_jacobi(0.3, I));

  const basis2d::RadialScale sc(0.5);
  const ImageTerm w = family_image(BasisFamily::weighted_zernike(0.5, sc), 0.5);
  CHECK(w.family.kind == FamilyKind::ExtendedZernike);
  CHECK(w.coeff == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(family_image(BasisFamily::weighted_zernike(0.25, sc), 0.5), ParameterError);
  CHECK_THROWS_AS(family_image(BasisFamily::extended_zernike(0.5, sc), 0.25), ParameterError);
  CHECK(family_image(BasisFamily::extended_zernike(-0.5, sc), 0.5).family.kind == FamilyKind::WeightedZernike);
  // s + t must stay admissible
  CHECK_THROWS_AS(family_image(BasisFamily::extended_jacobi(0.3, 0.6, I), 0.5), ParameterError);
}

TEST_CASE("composing images adds exponents") {
  const Interval I(-3.0, 2.0);
  for (const auto& fam : {BasisFamily::weighted_jacobi(0.25, I), BasisFamily::extended_jacobi(0.25, 0.1, I)}) {
    for (auto [t, s] : {std::pair{0.2, 0.15}, {0.1, 0.3}, {-0.05, 0.4}}) {
      const ImageTerm one = family_image(fam, t);
      const ImageTerm two = family_image(one.family, s);
      const ImageTerm both = family_image(fam, s + t);
      CHECK(two.family.kind == both.family.kind);
      CHECK(two.family.a == both.family.a);
      CHECK(std::abs(two.family.s - both.family.s) <= 1e-15);
      CHECK(std::abs(one.coeff * two.coeff - both.coeff) <= 1e-14 * std::abs(both.coeff));
    }
  }
}

TEST_CASE("dilated images carry the length factor") {
  // (-Delta)^t Q on [-2, 2] against the principal-value integral
  const double t = 1.0 / 3.0, a = 0.25;
  const BasisFamily fam = BasisFamily::weighted_jacobi(a, {-2.0, 2.0});
  const SumSpace S({fam}, 4);
  const SpaceImage img = operator_image(S, OperatorSpec::fractional(t));
  const Points P = Points::line({-1.3, 0.4, 2.5, -6.0});
  const Eigen::MatrixXd M = assemble_matrix(img, P);
  for (int n = 0; n < 4; ++n) {
    for (std::size_t i = 0; i < P.size(); ++i) {
      auto f = [&](double x) { return basis1d::weighted_q(n, {a, a}, x / 2.0); };
      const double o = oracle::frac_lap_pv(f, t, P.x[i], {-2.0, 2.0}, 2.0);
      CHECK(std::abs(M(static_cast<Eigen::Index>(i), n) - o) <= 1e-8 * std::abs(o));
    }
  }
}

TEST_CASE("collocation grids") {
  const std::vector<Interval> ivs{{-5, -3}, {-3, -1}, {-1, 1}, {1, 3}, {3, 5}};
  const Points g = collocation_grid_1d(ivs, 5001, 1e-2, {{-10, -5}, {5, 10}});
  CHECK(g.size() == 35007);
  CHECK(std::is_sorted(g.x.begin(), g.x.end()));
  CHECK(g.x.front() == doctest::Approx(-10 + 1e-2));
  const Points small = collocation_grid_1d({{0, 1}}, 3, 0.1);
  CHECK(small.x == std::vector<double>{0.1, 0.5, 0.9});
  CHECK_THROWS_AS(collocation_grid_1d({{0, 2}, {1, 3}}, 3, 0.1), ParameterError);
  CHECK_THROWS_AS(collocation_grid_1d({{0, 1}}, 3, 0.6), ParameterError);

  const Points p = collocation_grid_2d({0, 1, 1.5, 2, 3, 4, 10}, 1001, 1e-3, 30);
  CHECK(p.size() == 180180);
  CHECK(p.dim == 2);
  const double r0 = std::hypot(p.x[0], p.y[0]);
  CHECK(r0 == doctest::Approx(1e-3));
}

TEST_CASE("evaluate_family respects the dilation") {
  const basis2d::RadialScale sc(0.25);
  const BasisFamily fam = BasisFamily::weighted_zernike(0.5, sc, 2, 0);
  const Points p = Points::plane({0.3, 1.7, -2.2}, {0.1, -0.9, 2.5});
  const Points q = Points::plane({0.075, 0.425, -0.55}, {0.025, -0.225, 0.625});
  const Eigen::MatrixXd M = evaluate_family(fam, 3, p);
  const Eigen::MatrixXd U = evaluate_family(BasisFamily::weighted_zernike(0.5, {}, 2, 0), 3, q);
  CHECK((M - U).cwiseAbs().maxCoeff() <= 1e-15);
  for (int k = 0; k <= 3; ++k) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      const double w = basis2d::weighted_w({2 + 2 * k, 2, 0}, 0.5, q.x[i], q.y[i]);
      CHECK(std::abs(M(static_cast<Eigen::Index>(i), k) - w) <= 1e-14 * std::max(1.0, std::abs(w)));
    }
  }
}

TEST_CASE("truncated svd properties") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> nd;
  // rank-deficient frame matrix: two nearly equal column blocks
  Eigen::MatrixXd A(80, 30);
  for (Eigen::Index i = 0; i < A.size(); ++i) A.data()[i] = nd(rng);
  A.rightCols(10) = A.leftCols(10) + 1e-9 * A.middleCols(10, 10);
  Eigen::VectorXd y(80);
  for (auto& v : y) v = nd(rng);
  const LsSystem sys(A);
  const auto& sig = sys.singular_values();
  double prev_res = -1.0;
  for (double eps : {1e-12, 1e-9, 1e-6, 1e-3, 1.0, 1e3}) {
    const TsvdReport r = sys.solve(y, eps);
    CHECK(r.coeffs.norm() <= y.norm() / eps);
    for (int k = 0; k < sig.size(); ++k) CHECK((sig(k) >= eps) == (k < r.kept_rank));
    CHECK(r.residual >= prev_res - 1e-13 * y.norm());
    prev_res = r.residual;
  }
  const TsvdReport all = sys.solve(y, 1e6);
  CHECK(all.all_truncated);
  CHECK(all.coeffs.isZero());
  const TsvdReport def = sys.solve(y);
  CHECK(def.cutoff == doctest::Approx(kDefaultRelativeCutoff * sig(0)));
}

TEST_CASE("assembly is reproducible and expansion reads off columns") {
  const double s = 1.0 / 3.0;
  const SumSpace S(two_interval_families(s), 24);
  const OperatorSpec op = OperatorSpec::shifted(s);
  const Points g = collocation_grid_1d({{-1, 0}, {0, 1}}, 120, 1e-2, {{-3, -1}, {1, 3}});
  const SpaceImage img = operator_image(S, op);
  const Eigen::MatrixXd A = assemble_matrix(img, g);
  const Eigen::MatrixXd B = assemble_matrix(img, g);
  CHECK(A.cwiseEqual(B).all());
  for (int c : {0, 5, 13}) {
    const Expansion e = expand(S.truncated(8), op, A.col(c), g);
    if (c < 8) {
      Eigen::VectorXd unit = Eigen::VectorXd::Zero(8);
      unit(c) = 1.0;
      CHECK((e.coeffs - unit).lpNorm<Eigen::Infinity>() <= 1e-8);
    }
    if (c < 8) CHECK(e.rhs_linf_error <= 1e-12);
  }
}

TEST_CASE("operator spec validation") {
  CHECK_NOTHROW(OperatorSpec::identity().validate());
  CHECK_THROWS_AS(OperatorSpec{}.validate(), ParameterError);
  CHECK_THROWS_AS(OperatorSpec::fractional(1.5).validate(), ParameterError);
  CHECK(OperatorSpec::shifted(0.25).terms.size() == 2);
}

}  // TEST_SUITE

#include <cmath>
#include <tuple>
#include <utility>
#include <random>
#include <vector>

#include <doctest.h>

#include "fracframes/error.hpp"
#include "fracframes/frame.hpp"
#include "fracframes/solver.hpp"
#include "fracframes/timestep.hpp"

using namespace fracframes;
using namespace fracframes::timestep;

namespace {

// c' = -K c with K symmetric positive definite, written as X = I, X_star = K.
struct LinearOde {
  Eigen::MatrixXd K;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;
  explicit LinearOde(int n) {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> nd;
    Eigen::MatrixXd B(n, n);
    for (Eigen::Index i = 0; i < B.size(); ++i) B.data()[i] = nd(rng);
    K = B * B.transpose() / (4.0 * n) + 0.5 * Eigen::MatrixXd::Identity(n, n);
    eig.compute(K);
  }
  [[nodiscard]] Eigen::VectorXd exact(const Eigen::VectorXd& c0, double t) const {
    const Eigen::VectorXd e = (-t * eig.eigenvalues().array()).exp();
    return eig.eigenvectors() * e.asDiagonal() * eig.eigenvectors().transpose() * c0;
  }
};

struct HeatSetup {
  Eigen::MatrixXd X, Xs;
  frame::Points grid;
  frame::SumSpace space;
};

HeatSetup small_heat(double s) {
  std::vector<basis1d::Interval> ivs{{-3, -1}, {-1, 1}, {1, 3}};
  std::vector<frame::BasisFamily> fams;
  for (const auto& I : ivs) fams.push_back(frame::BasisFamily::extended_jacobi(-s, -s, I, 1));
  for (const auto& I : ivs) fams.push_back(frame::BasisFamily::weighted_jacobi(s, I));
  HeatSetup h;
  h.space = frame::SumSpace(fams, 42);
  h.grid = frame::collocation_grid_1d(ivs, 101, 1e-3, {{-10, -3}, {3, 10}});
  h.X = frame::assemble_matrix(frame::identity_image(h.space), h.grid);
  h.Xs = frame::assemble_matrix(frame::operator_image(h.space, frame::OperatorSpec::fractional(s)), h.grid);
  return h;
}

}  // namespace

TEST_SUITE("timestep") {

TEST_CASE("shipped tableaux satisfy their order conditions") {
  const std::vector<int> orders{1, 2, 4, 6};
  const auto names = tableau_names();
  REQUIRE(names.size() == 4);
  for (std::size_t k = 0; k < names.size(); ++k) {
    const ButcherTableau t = tableau(names[k]);
    CHECK(t.order == orders[k]);
    CHECK(t.order_defect() <= 1e-12);
    CHECK_NOTHROW(t.validate());
  }
  CHECK_THROWS_AS(tableau("rk4"), ParameterError);
  ButcherTableau bad = tableau("implicit-midpoint");
  bad.b(0) = 0.9;
  CHECK_THROWS_AS(bad.validate(), ParameterError);
}

TEST_CASE("kronecker system") {
  const HeatSetup h = small_heat(0.5);
  const ButcherTableau be = tableau("backward-euler");
  const Eigen::MatrixXd XA = kronecker_system(be, 0.1, h.X, h.Xs);
  const Eigen::MatrixXd want = h.X + 0.1 * be.A(0, 0) * h.Xs;
  CHECK(XA.cwiseEqual(want).all());
  const ButcherTableau gl = tableau("gauss-legendre-4");
  const Eigen::MatrixXd XB = kronecker_system(gl, 0.2, h.X, h.Xs);
  CHECK(XB.rows() == 2 * h.X.rows());
  const Eigen::Index M = h.X.rows(), N = h.X.cols();
  CHECK(XB.block(M, 0, M, N).cwiseEqual(0.2 * gl.A(1, 0) * h.Xs).all());
  CHECK_THROWS_AS(kronecker_system(be, 0.1, h.X, h.Xs.leftCols(3)), ShapeError);
}

TEST_CASE("a zero step leaves the state unchanged") {
  const HeatSetup h = small_heat(0.5);
  TimeState st{0.0, Eigen::VectorXd::LinSpaced(h.X.cols(), -1.0, 1.0)};
  const TimeState next = rk_step(st, tableau("gauss-legendre-6"), 0.0, h.X, h.Xs);
  CHECK(next.coeffs.cwiseEqual(st.coeffs).all());
}

TEST_CASE("local and global orders on a linear system") {
  const LinearOde ode(6);
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(6, 6);
  const Eigen::VectorXd c0 = Eigen::VectorXd::LinSpaced(6, 1.0, -0.5);
  for (auto [name, p] : {std::pair{"backward-euler", 1}, {"implicit-midpoint", 2}, {"gauss-legendre-4", 4},
                         {"gauss-legendre-6", 6}}) {
    const ButcherTableau tab = tableau(name);
    const double h = p >= 4 ? 0.25 : 0.02;
    const double e1 = (rk_step({0, c0}, tab, h, I, ode.K).coeffs - ode.exact(c0, h)).norm();
    const double e2 = (rk_step({0, c0}, tab, h / 2, I, ode.K).coeffs - ode.exact(c0, h / 2)).norm();
    const double local = std::log2(e1 / e2);
    CAPTURE(name);
    CAPTURE(local);
    CHECK(std::abs(local - (p + 1)) <= 0.3);
    const double g1 = (integrate({0, c0}, tab, h, 2.0, I, ode.K).final_state.coeffs - ode.exact(c0, 2.0)).norm();
    const double g2 = (integrate({0, c0}, tab, h / 2, 2.0, I, ode.K).final_state.coeffs - ode.exact(c0, 2.0)).norm();
    CHECK(std::abs(std::log2(g1 / g2) - p) <= 0.3);
  }
}

TEST_CASE("backward euler equals the stationary solve") {
  const double s = 0.5, dt = 0.05;
  const HeatSetup h = small_heat(s);
  const Eigen::VectorXd u0 =
      solver::solve_stationary(frame::OperatorSpec::identity(),
                               [](double x, double) { return 1.0 / (1.0 + x * x); }, h.space, h.grid)
          .coeffs;
  const TimeState be = rk_step({0, u0}, tableau("backward-euler"), dt, h.X, h.Xs, 1e-13);
  const frame::OperatorSpec op{{{1.0, 0.0}, {dt, s}}};
  const auto st = solver::solve_stationary(op, Eigen::VectorXd(h.X * u0), h.space, h.grid, 1e-13);
  REQUIRE(st.diagnostics.kept_rank == h.X.cols());
  CHECK((be.coeffs - st.coeffs).lpNorm<Eigen::Infinity>() <= 1e-9);
}

TEST_CASE("heat solution sup norm does not grow") {
  const HeatSetup h = small_heat(0.5);
  const Eigen::VectorXd u0 =
      solver::solve_stationary(frame::OperatorSpec::identity(),
                               [](double x, double) { return 1.0 / (1.0 + x * x); }, h.space, h.grid)
          .coeffs;
  double prev = (h.X * u0).lpNorm<Eigen::Infinity>();
  bool monotone = true;
  integrate({0, u0}, tableau("gauss-legendre-4"), 0.1, 1.0, h.X, h.Xs, std::nullopt, false,
            [&](const TimeState& st) {
              const double now = (h.X * st.coeffs).lpNorm<Eigen::Infinity>();
              if (now > prev + 1e-8) monotone = false;
              prev = now;
            });
  CHECK(monotone);
}

TEST_CASE("reusing the factorization is bit-identical") {
  const HeatSetup h = small_heat(0.5);
  const ButcherTableau tab = tableau("implicit-midpoint");
  TimeState st{0, Eigen::VectorXd::Ones(h.X.cols())};
  const Trajectory tr = integrate(st, tab, 0.25, 1.0, h.X, h.Xs, std::nullopt, true);
  for (int j = 1; j <= 4; ++j) {
    st = rk_step(st, tab, 0.25, h.X, h.Xs);
    CHECK(st.coeffs.cwiseEqual(tr.snapshots[j].coeffs).all());
  }
  CHECK(tr.snapshots.size() == 5);
  CHECK(tr.records.size() == 4);
  CHECK(tr.final_state.t == doctest::Approx(1.0));
}

TEST_CASE("a constant exponent in the variable integrator matches integrate") {
  const double s = 0.5;
  const HeatSetup h = small_heat(s);
  const Eigen::VectorXd u0 =
      solver::solve_stationary(frame::OperatorSpec::identity(),
                               [](double x, double) { return 1.0 / (1.0 + x * x); }, h.space, h.grid)
          .coeffs;
  const ButcherTableau tab = tableau("gauss-legendre-4");
  const Trajectory a = integrate({0, u0}, tab, 0.1, 0.5, h.X, h.Xs);
  const Trajectory b = integrate_variable_s(
      {0, u0}, tab, 0.1, 0.5, [](double) { return 0.5; }, [&](double) { return StepMatrices{h.X, h.Xs}; });
  const Eigen::VectorXd va = h.X * a.final_state.coeffs;
  const Eigen::VectorXd vb = h.X * b.final_state.coeffs;
  CHECK((va - vb).lpNorm<Eigen::Infinity>() <= 1e-8);
}

TEST_CASE("step counts") {
  CHECK(step_count(0.0, 1.0, 1e-3) == 1000);
  CHECK(step_count(0.0, 1.0, 0.1) == 10);
  CHECK(step_count(0.5, 0.5, 0.1) == 0);
  CHECK_THROWS_AS(step_count(0.0, 1.0, 0.3), ParameterError);
  CHECK_THROWS_AS(step_count(0.0, 1.0, 0.0), ParameterError);
  CHECK_THROWS_AS(step_count(1.0, 0.0, 0.1), ParameterError);
}

}  // TEST_SUITE

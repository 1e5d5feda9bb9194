#include <catch2/catch_amalgamated.hpp>

#include "cgafact/errors.hpp"
#include "cgafact/numeric.hpp"

using namespace cgafact;

TEST_CASE("rng streams are deterministic and uniform-bounded") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    const double x = a.uniform();
    CHECK(x == b.uniform());
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
  Rng c(43);
  bool differs = false;
  Rng a2(42);
  for (int i = 0; i < 10; ++i) differs = differs || (a2.uniform() != c.uniform());
  CHECK(differs);
  Rng d(1);
  for (int i = 0; i < 100; ++i) {
    const double x = d.uniform(-3.0, 5.0);
    CHECK(x >= -3.0);
    CHECK(x < 5.0);
  }
}

TEST_CASE("affine solve: full rank square system") {
  Eigen::MatrixXd A(2, 2);
  A << 2, 0, 0, 3;
  Eigen::VectorXd b(2);
  b << 4, 9;
  const auto s = svd_affine_solve(A, b);
  CHECK(s.consistent);
  CHECK(s.rank == 2);
  CHECK(s.nullspace.cols() == 0);
  CHECK(std::abs(s.particular(0) - 2.0) <= 1e-12);
  CHECK(std::abs(s.particular(1) - 3.0) <= 1e-12);
}

TEST_CASE("affine solve: underdetermined system exposes its nullspace") {
  Eigen::MatrixXd A(1, 3);
  A << 1, 1, 0;
  Eigen::VectorXd b(1);
  b << 2;
  const auto s = svd_affine_solve(A, b);
  CHECK(s.consistent);
  CHECK(s.rank == 1);
  REQUIRE(s.nullspace.cols() == 2);
  CHECK((A * s.particular - b).lpNorm<Eigen::Infinity>() <= 1e-12);
  CHECK((A * s.nullspace).lpNorm<Eigen::Infinity>() <= 1e-12);
  // minimal-norm particular solution
  CHECK(std::abs(s.particular(0) - 1.0) <= 1e-12);
  CHECK(std::abs(s.particular(1) - 1.0) <= 1e-12);
  CHECK(std::abs(s.particular(2)) <= 1e-12);
}

TEST_CASE("affine solve: inconsistent system is flagged, not fudged") {
  Eigen::MatrixXd A(2, 1);
  A << 1, 1;
  Eigen::VectorXd b(2);
  b << 0, 1;
  const auto s = svd_affine_solve(A, b);
  CHECK_FALSE(s.consistent);
}

TEST_CASE("affine solve: ambiguous rank throws instead of guessing") {
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(3, 3);
  A(0, 0) = 1.0;
  A(1, 1) = 1.2e-7;
  A(2, 2) = 0.8e-7;
  Eigen::VectorXd b = Eigen::VectorXd::Zero(3);
  CHECK_THROWS_AS(svd_affine_solve(A, b, 1e-7, 100.0, 1e-7),
                  NumericalRankAmbiguity);
}

TEST_CASE("gauss-newton solves a scalar quadratic") {
  auto F = [](const Eigen::VectorXd& x) {
    Eigen::VectorXd r(1);
    r(0) = x(0) * x(0) - 4.0;
    return r;
  };
  auto J = [](const Eigen::VectorXd& x) {
    Eigen::MatrixXd j(1, 1);
    j(0, 0) = 2.0 * x(0);
    return j;
  };
  Eigen::VectorXd x0(1);
  x0 << 1.0;
  const auto r = gauss_newton(F, J, x0);
  CHECK(r.converged);
  CHECK(std::abs(r.x(0) - 2.0) <= 1e-9);
}

TEST_CASE("gauss-newton converges on a coupled system") {
  // circle x^2 + y^2 = 25 intersected with line x - y = 1
  auto F = [](const Eigen::VectorXd& v) {
    Eigen::VectorXd r(2);
    r(0) = v(0) * v(0) + v(1) * v(1) - 25.0;
    r(1) = v(0) - v(1) - 1.0;
    return r;
  };
  auto J = [](const Eigen::VectorXd& v) {
    Eigen::MatrixXd j(2, 2);
    j << 2.0 * v(0), 2.0 * v(1), 1.0, -1.0;
    return j;
  };
  Eigen::VectorXd x0(2);
  x0 << 5.0, 1.0;
  const auto r = gauss_newton(F, J, x0);
  CHECK(r.converged);
  CHECK(std::abs(r.x(0) - 4.0) <= 1e-8);
  CHECK(std::abs(r.x(1) - 3.0) <= 1e-8);
}

TEST_CASE("gauss-newton tolerates an empty parameter vector") {
  auto F = [](const Eigen::VectorXd&) {
    Eigen::VectorXd r(1);
    r(0) = 0.0;
    return r;
  };
  auto J = [](const Eigen::VectorXd&) { return Eigen::MatrixXd(1, 0); };
  const auto r = gauss_newton(F, J, Eigen::VectorXd(0));
  CHECK(r.converged);
  CHECK(r.residual_inf == 0.0);
}

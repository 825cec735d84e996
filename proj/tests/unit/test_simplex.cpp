#include <doctest.h>

#include "spectral_bounds/simplex.hpp"

using namespace spectral_bounds;

TEST_CASE("textbook maximum") {
  // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18  ->  (2, 6), 36
  Eigen::MatrixXd A(3, 2);
  A << 1, 0, 0, 2, 3, 2;
  Eigen::VectorXd b(3), c(2);
  b << 4, 12, 18;
  c << 3, 5;
  const LpResult r = maximize_lp(A, b, c);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.objective == doctest::Approx(36.0).epsilon(1e-12));
  CHECK(r.x[0] == doctest::Approx(2.0));
  CHECK(r.x[1] == doctest::Approx(6.0));
}

TEST_CASE("negative right-hand side needs phase one") {
  // max -x - y with x + y >= 2 written as -x - y <= -2
  Eigen::MatrixXd A(2, 2);
  A << -1, -1, 1, 0;
  Eigen::VectorXd b(2), c(2);
  b << -2, 5;
  c << -1, -1;
  const LpResult r = maximize_lp(A, b, c);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.objective == doctest::Approx(-2.0));
}

TEST_CASE("infeasible and unbounded") {
  Eigen::MatrixXd A(2, 1);
  A << 1, -1;
  Eigen::VectorXd b(2), c(1);
  b << 1, -2;  // x <= 1 and x >= 2
  c << 1;
  CHECK(maximize_lp(A, b, c).status == LpStatus::infeasible);

  Eigen::MatrixXd A2(1, 2);
  A2 << 1, -1;
  Eigen::VectorXd b2(1), c2(2);
  b2 << 1;
  c2 << 0, 1;
  CHECK(maximize_lp(A2, b2, c2).status == LpStatus::unbounded);
}

TEST_CASE("degenerate vertex terminates") {
  // Several constraints active at the optimum.
  Eigen::MatrixXd A(4, 2);
  A << 1, 1, 1, 0, 0, 1, 2, 2;
  Eigen::VectorXd b(4), c(2);
  b << 1, 1, 1, 2;
  c << 1, 1;
  const LpResult r = maximize_lp(A, b, c);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.objective == doctest::Approx(1.0));
}

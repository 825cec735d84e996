#include <doctest.h>

#include <cmath>
#include <numbers>

#include "spectral_bounds/quadrature.hpp"

using namespace spectral_bounds;

TEST_CASE("Gauss-Legendre is exact to degree 2n-1") {
  for (int n : {1, 2, 4, 8, 16, 32}) {
    const QuadratureRule& r = gauss_legendre(n);
    REQUIRE(r.nodes.size() == static_cast<std::size_t>(n));
    for (int deg = 0; deg <= 2 * n - 1; ++deg) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += r.weights[i] * std::pow(r.nodes[i], deg);
      const double exact = deg % 2 == 1 ? 0.0 : 2.0 / (deg + 1);
      CHECK(s == doctest::Approx(exact).epsilon(1e-13).scale(1.0));
    }
  }
}

TEST_CASE("rule size outside range throws") {
  CHECK_THROWS(gauss_legendre(0));
  CHECK_THROWS(gauss_legendre(65));
}

TEST_CASE("composite and adaptive integration") {
  const double exact = 1.0 - std::cos(2.0);
  CHECK(integrate_composite([](double x) { return std::sin(x); }, 0.0, 2.0, 8, 8) ==
        doctest::Approx(exact).epsilon(1e-14));
  const QuadratureRule r = composite_gauss_legendre(0.0, 2.0, 8, 8);
  double s = 0.0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * std::sin(r.nodes[i]);
  CHECK(s == doctest::Approx(exact).epsilon(1e-14));
  // integral of 1/(1+x^2) over [0,1]
  CHECK(integrate_adaptive([](double x) { return 1.0 / (1.0 + x * x); }, 0.0, 1.0, 1e-13) ==
        doctest::Approx(std::numbers::pi / 4).epsilon(1e-13));
}

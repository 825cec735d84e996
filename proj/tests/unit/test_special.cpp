#include <doctest.h>

#include <cmath>
#include <numbers>

#include <boost/math/special_functions/bessel.hpp>

#include "spectral_bounds/error.hpp"
#include "spectral_bounds/special.hpp"

using namespace spectral_bounds;
using std::numbers::pi;

namespace {

struct Sample {
  double nu, x, value;
};

// 30-digit reference values, truncated to 17 significant digits.
const Sample kJ[] = {
    {0, 0.1, 0.99750156206604003}, {0, 1.0, 0.76519768655796655},   {0, 2.5, -0.048383776468197996},
    {0, 7.3, 0.28821694763501440}, {0, 25.0, 0.096266783275958116}, {0, 60.0, -0.091471804089061870},
    {0.5, 0.1, 0.25189294032600095}, {0.5, 2.5, 0.30200490606236568}, {0.5, 60.0, -0.031397461182520413},
    {1, 0.1, 0.049937526036242000}, {1, 1.0, 0.44005058574493352},   {1, 7.3, 0.082570430493257831},
    {1, 25.0, -0.12535024958028990}, {1, 60.0, 0.046598383758166318}, {1.5, 1.0, 0.24029783912342701},
    {1.5, 7.3, -0.12095301097363061}, {2, 0.1, 0.0012489586587999190}, {2, 2.5, 0.44605905843961723},
    {2, 25.0, -0.10629480324238131}, {2.5, 1.0, 0.049496810228477942}, {2.5, 25.0, 0.0020381361533260554},
    {3.7, 0.1, 9.9437991190052235e-7}, {3.7, 2.5, 0.10501875574055598}, {3.7, 7.3, -0.019546029615767204},
    {3.7, 60.0, -0.10250650843337926},
};

const Sample kY[] = {
    {0, 0.3, -0.80727357780451949}, {0, 1.0, 0.088256964215676958}, {0, 4.2, -0.093751201314434679},
    {0, 19.5, -0.025451742976154467}, {0, 40.0, 0.12593641705826093}, {1, 0.3, -2.2931051383885291},
    {1, 1.0, -0.78121282130028872}, {1, 4.2, 0.36801280785417505}, {1, 19.5, -0.17956456689631789},
    {1, 40.0, -0.0057935058215496329},
};

}  // namespace

TEST_CASE("J against reference values") {
  for (const Sample& s : kJ) {
    CAPTURE(s.nu);
    CAPTURE(s.x);
    CHECK(std::abs(bessel_j(s.nu, s.x) - s.value) <= 1e-13 * std::max(1.0, std::abs(s.value)));
  }
}

TEST_CASE("Y against reference values") {
  for (const Sample& s : kY) {
    CAPTURE(s.nu);
    CAPTURE(s.x);
    CHECK(std::abs(bessel_y(static_cast<int>(s.nu), s.x) - s.value) <= 1e-13 * std::max(1.0, std::abs(s.value)));
  }
}

TEST_CASE("agreement with Boost on a dense grid") {
  for (double nu : {0.0, 0.5, 1.0, 2.0, 3.5, 5.0}) {
    for (double x = 0.05; x < 80.0; x += 0.37) {
      CAPTURE(nu);
      CAPTURE(x);
      CHECK(std::abs(bessel_j(nu, x) - boost::math::cyl_bessel_j(nu, x)) <= 1e-12);
    }
  }
  for (int n : {0, 1}) {
    for (double x = 0.05; x < 80.0; x += 0.37) {
      CAPTURE(x);
      const double ref = boost::math::cyl_neumann(n, x);
      CHECK(std::abs(bessel_y(n, x) - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
    }
  }
}

TEST_CASE("half-integer order has a closed form") {
  for (double x : {0.3, 1.7, 9.0, 33.0}) {
    CHECK(bessel_j(0.5, x) == doctest::Approx(std::sqrt(2 / (pi * x)) * std::sin(x)).epsilon(1e-13));
  }
  CHECK(bessel_j(0.0, 0.0) == 1.0);
  CHECK(bessel_j(2.0, 0.0) == 0.0);
}

TEST_CASE("first zeros") {
  CHECK(first_zero(0) == doctest::Approx(2.4048255576957728).epsilon(1e-15));
  CHECK(first_zero(0.5) == doctest::Approx(pi).epsilon(1e-15));
  CHECK(first_zero(1) == doctest::Approx(3.8317059702075123).epsilon(1e-15));
  CHECK(first_zero(1.5) == doctest::Approx(4.4934094579090642).epsilon(1e-15));
  CHECK(first_zero(2) == doctest::Approx(5.1356223018406826).epsilon(1e-15));
  CHECK(first_zero(3) == doctest::Approx(6.3801618959239835).epsilon(1e-15));
  CHECK(first_zero(4.5) == doctest::Approx(8.1825614525712427).epsilon(1e-15));
  CHECK(first_zero(1, 0.003) == doctest::Approx(first_zero(1, 0.3)).epsilon(1e-14));
  CHECK_THROWS_AS(first_zero(-1), DomainError);
}

TEST_CASE("ball constants") {
  const BallConstants c2 = ball_constants(2);
  CHECK(c2.volume_B1 == doctest::Approx(pi));
  CHECK(c2.torsion_B1 == doctest::Approx(pi / 8));
  CHECK(c2.lambda2_B1 == doctest::Approx(3.8317059702075123 * 3.8317059702075123));
  const BallConstants c3 = ball_constants(3);
  CHECK(c3.lambda1_B1 == doctest::Approx(pi * pi));
  CHECK(c3.volume_B1 == doctest::Approx(4 * pi / 3));
  CHECK(c3.torsion_B1 == doctest::Approx(4 * pi / 45));
  CHECK(ball_constants(1).lambda1_B1 == doctest::Approx(pi * pi / 4));
  CHECK(ball_constants(1).volume_B1 == doctest::Approx(2.0));
  CHECK_THROWS_AS(ball_constants(0), DomainError);
}

TEST_CASE("annulus root") {
  CHECK(pw_root(0.0) == doctest::Approx(2.4048255576957728).epsilon(1e-14));
  CHECK(pw_root(0.1) == doctest::Approx(2.4481003613530497).epsilon(1e-12));
  CHECK(pw_root(0.3) == doctest::Approx(2.7855851614582053).epsilon(1e-12));
  CHECK(pw_root(0.5) == doctest::Approx(3.5880218095173768).epsilon(1e-12));
  CHECK(pw_root(0.8) == doctest::Approx(8.2121663740404168).epsilon(1e-12));
  CHECK(pw_root(0.95) == doctest::Approx(31.743229714852133).epsilon(1e-12));
  double prev = 0.0;
  for (double p = 0.0; p < 0.99; p += 0.03) {
    const double k = pw_root(p);
    CHECK(k > prev);
    prev = k;
  }
  CHECK_THROWS_AS(pw_root(1.0), DomainError);
  CHECK_THROWS_AS(pw_root(-0.1), DomainError);
}

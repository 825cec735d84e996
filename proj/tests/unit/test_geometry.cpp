#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "polygon.hpp"
#include "spectral_bounds/error.hpp"
#include "spectral_bounds/geometry.hpp"

using namespace spectral_bounds;
using std::numbers::pi;

namespace {

Point pt(std::initializer_list<double> xs) {
  Point p(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) p[i++] = x;
  return p;
}

HalfSpace hs(double nx, double ny, double offset) { return {pt({nx, ny}), offset}; }

ShapeSpec triangle() {
  // x > 0, y > 0, x + y < 1
  return ShapeSpec::polytope({hs(-1, 0, 0), hs(0, -1, 0), hs(1, 1, 1)});
}

}  // namespace

TEST_CASE("measures of the catalog shapes") {
  SUBCASE("rectangle") {
    const DomainMeasures m = measures(ShapeSpec::parallelepiped({0.5, 1.0}));
    CHECK(m.volume == doctest::Approx(2.0));
    CHECK(m.surface == doctest::Approx(6.0));
    CHECK(m.inradius == doctest::Approx(0.5));
    CHECK(m.dimension == 2);
  }
  SUBCASE("box") {
    const DomainMeasures m = measures(ShapeSpec::parallelepiped({1, 2, 3}));
    CHECK(m.volume == doctest::Approx(48.0));
    CHECK(m.surface == doctest::Approx(8.0 * (1 * 2 + 1 * 3 + 2 * 3)));
  }
  SUBCASE("ellipse perimeter") {
    const DomainMeasures m = measures(ShapeSpec::ellipsoid({0.5, 1.0}));
    CHECK(m.volume == doctest::Approx(pi / 2));
    CHECK(m.surface == doctest::Approx(4.8442241102738381).epsilon(1e-13));
    CHECK(m.inradius == doctest::Approx(0.5));
  }
  SUBCASE("prolate spheroid area") {
    const DomainMeasures m = measures(ShapeSpec::ellipsoid({1.0, 1.0, 2.0}));
    CHECK(m.volume == doctest::Approx(4.0 * pi * 2.0 / 3.0));
    CHECK(m.surface == doctest::Approx(2 * pi * (1 + 4 * pi / (3 * std::sqrt(3.0)))).epsilon(1e-12));
  }
  SUBCASE("stadium") {
    const DomainMeasures m = measures(ShapeSpec::stadium(1.0, 2.0));
    CHECK(m.volume == doctest::Approx(8.0 + pi));
    CHECK(m.surface == doctest::Approx(8.0 + 2 * pi));
    CHECK(m.inradius == doctest::Approx(1.0));
  }
  SUBCASE("swiss cross") {
    const DomainMeasures m = measures(ShapeSpec::swiss_cross(1.0, 2.0));
    CHECK(m.volume == doctest::Approx(4.0 + 4 * 4.0));
    CHECK(m.surface == doctest::Approx(8.0 * 3.0));
    CHECK(m.inradius == doctest::Approx(1.0));
  }
  SUBCASE("balls") {
    const DomainMeasures m2 = measures(ShapeSpec::ball(2.0, 2));
    CHECK(m2.volume == doctest::Approx(4 * pi));
    CHECK(m2.surface == doctest::Approx(4 * pi));
    const DomainMeasures m3 = measures(ShapeSpec::ball(1.0, 3));
    CHECK(m3.volume == doctest::Approx(4 * pi / 3));
    CHECK(m3.surface == doctest::Approx(4 * pi));
    const DomainMeasures m1 = measures(ShapeSpec::ball(1.5, 1));
    CHECK(m1.volume == doctest::Approx(3.0));
    CHECK(m1.surface == doctest::Approx(2.0));
  }
  SUBCASE("triangle") {
    const ShapeSpec t = triangle();
    const DomainMeasures m = measures(t);
    CHECK(m.volume == doctest::Approx(0.5));
    CHECK(m.surface == doctest::Approx(2.0 + std::sqrt(2.0)));
    CHECK(m.inradius == doctest::Approx(1.0 / (2.0 + std::sqrt(2.0))));
  }
}

TEST_CASE("invalid shapes are rejected") {
  CHECK_THROWS_AS(ShapeSpec::parallelepiped({1.0, -1.0}), InputError);
  CHECK_THROWS_AS(ShapeSpec::parallelepiped({1.0, 0.0}), InputError);
  CHECK_THROWS_AS(ShapeSpec::ellipsoid({1.0, 1.0, 1.0, 1.0}), InputError);
  CHECK_THROWS_AS(ShapeSpec::stadium(0.0, 1.0), InputError);
  CHECK_THROWS_AS(ShapeSpec::stadium(1.0, -0.5), InputError);
  CHECK_THROWS_AS(ShapeSpec::swiss_cross(-1.0, 1.0), InputError);
  CHECK_THROWS_AS(ShapeSpec::ball(1.0, 0), InputError);
  CHECK_THROWS_AS(ShapeSpec::ball(std::nan(""), 2), InputError);
  SUBCASE("unbounded polygon") {
    CHECK_THROWS_WITH_AS(ShapeSpec::polytope({hs(1, 0, 1), hs(-1, 0, 1), hs(0, 1, 1)}), "unbounded domain",
                         InputError);
  }
  SUBCASE("empty polygon") {
    CHECK_THROWS_AS(ShapeSpec::polytope({hs(1, 0, -1), hs(-1, 0, -1), hs(0, 1, 1), hs(0, -1, 1)}), InputError);
  }
}

TEST_CASE("shape kind names") {
  CHECK(parse_shape_kind("rect") == ShapeKind::parallelepiped);
  CHECK(parse_shape_kind("ellipse") == ShapeKind::ellipsoid);
  CHECK(parse_shape_kind("cross") == ShapeKind::swiss_cross);
  CHECK(parse_shape_kind("disc") == ShapeKind::ball);
  CHECK(parse_shape_kind("polygon") == ShapeKind::polytope);
  for (ShapeKind k : {ShapeKind::parallelepiped, ShapeKind::ellipsoid, ShapeKind::stadium, ShapeKind::swiss_cross,
                      ShapeKind::polytope, ShapeKind::ball}) {
    CHECK(parse_shape_kind(to_string(k)) == k);
  }
  CHECK_THROWS_AS(parse_shape_kind("torus"), InputError);
}

TEST_CASE("convexity") {
  CHECK(ShapeSpec::stadium(1.0, 3.0).is_convex());
  CHECK_FALSE(ShapeSpec::swiss_cross(1.0, 1.0).is_convex());
  CHECK(ShapeSpec::swiss_cross(1.0, 0.0).is_convex());
  CHECK(triangle().is_convex());
}

TEST_CASE("polygon clipping labels edges by half-space") {
  const std::vector<HalfSpace> square = {hs(1, 0, 1), hs(0, 1, 1), hs(-1, 0, 1), hs(0, -1, 1), hs(1, 1, 5)};
  const detail::LabeledPolygon p = detail::clip_halfspaces(square);
  CHECK(p.vertices.size() == 4);
  CHECK(detail::polygon_area(p.vertices) == doctest::Approx(4.0));
  CHECK(detail::polygon_perimeter(p.vertices) == doctest::Approx(8.0));
  for (int label : p.edge_labels) CHECK(label != 4);  // redundant constraint owns no edge
}

TEST_CASE("Chebyshev center") {
  const ChebyshevCenter c = inradius_polytope(triangle().halfspaces());
  const double r = 1.0 / (2.0 + std::sqrt(2.0));
  CHECK(c.radius == doctest::Approx(r));
  CHECK(c.center[0] == doctest::Approx(r));
  CHECK(c.center[1] == doctest::Approx(r));
  // A long thin rectangle, offset from the origin.
  const ShapeSpec rect = ShapeSpec::polytope({hs(1, 0, 10), hs(-1, 0, -4), hs(0, 1, 3.5), hs(0, -1, -3)});
  CHECK(measures(rect).inradius == doctest::Approx(0.25));
  CHECK(default_center(rect)[1] == doctest::Approx(3.25));
}

TEST_CASE("boundary mesh totals the surface measure") {
  for (const ShapeSpec& s : {ShapeSpec::parallelepiped({1, 2}), ShapeSpec::parallelepiped({1, 2, 0.5}),
                             ShapeSpec::ellipsoid({0.3, 1}), ShapeSpec::ellipsoid({0.5, 1, 2}),
                             ShapeSpec::stadium(1, 0.5), ShapeSpec::swiss_cross(0.5, 1), ShapeSpec::ball(2, 3),
                             ShapeSpec::ball(1, 1), triangle()}) {
    CAPTURE(s.label());
    const BoundaryMesh mesh = boundary_mesh(s, 512);
    CHECK(mesh.total_weight == doctest::Approx(measures(s).surface).epsilon(1e-11));
    double sum = 0.0;
    for (const BoundaryNode& n : mesh.nodes) {
      sum += n.weight;
      CHECK(n.normal.norm() == doctest::Approx(1.0));
    }
    CHECK(sum == doctest::Approx(mesh.total_weight));
  }
  CHECK(boundary_mesh(ShapeSpec::parallelepiped({1, 1}), 16).facet_exact);
  CHECK_FALSE(boundary_mesh(ShapeSpec::stadium(1, 1), 16).facet_exact);
  CHECK_THROWS_AS(boundary_mesh(ShapeSpec::ball(1, 2), 2), InputError);
}

TEST_CASE("volume identity holds for any admissible center") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (const ShapeSpec& s : {ShapeSpec::parallelepiped({1, 2}), ShapeSpec::ellipsoid({0.5, 1}),
                             ShapeSpec::stadium(1, 2), ShapeSpec::swiss_cross(1, 2), triangle()}) {
    CAPTURE(s.label());
    const BoundaryMesh mesh = boundary_mesh(s, 512);
    const double volume = measures(s).volume;
    int used = 0;
    for (int trial = 0; trial < 200 && used < 10; ++trial) {
      Point xi = default_center(s) + 0.5 * measures(s).inradius * pt({u(rng), u(rng)});
      if (!is_star_center(mesh, xi)) continue;
      ++used;
      CHECK(support_integral(mesh, xi) / 2.0 == doctest::Approx(volume).epsilon(1e-11));
    }
    CHECK(used == 10);
  }
}

TEST_CASE("star-shapedness of the Swiss cross") {
  const ShapeSpec cross = ShapeSpec::swiss_cross(1.0, 2.0);
  const BoundaryMesh mesh = boundary_mesh(cross, 64);
  CHECK(is_star_center(mesh, pt({0.5, -0.5})));
  // Inside the cross but outside the kernel (the central square).
  const Point outside_kernel = pt({2.0, 0.0});
  CHECK(contains(cross, outside_kernel));
  CHECK_FALSE(is_star_center(mesh, outside_kernel));
  CHECK_THROWS_AS(support_inv_integral(mesh, outside_kernel), NotStarShapedError);
  // The kernel boundary itself is rejected.
  CHECK_FALSE(is_star_center(mesh, pt({1.0, 0.0})));
}

TEST_CASE("membership and boundary crossings") {
  const ShapeSpec st = ShapeSpec::stadium(1.0, 2.0);
  CHECK(contains(st, pt({2.5, 0.5})));
  CHECK_FALSE(contains(st, pt({2.9, 0.9})));
  CHECK_FALSE(contains(st, pt({0.0, 1.0})));  // open set
  const auto t = boundary_crossing(st, pt({2.0, 0.0}), 0, +1, 5.0);
  REQUIRE(t.has_value());
  CHECK(*t == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_FALSE(boundary_crossing(st, pt({0.0, 0.0}), 0, +1, 0.5).has_value());

  const ShapeSpec e = ShapeSpec::ellipsoid({2.0, 1.0});
  const auto te = boundary_crossing(e, pt({0.0, 0.5}), 0, -1, 5.0);
  REQUIRE(te.has_value());
  CHECK(*te == doctest::Approx(2.0 * std::sqrt(0.75)));

  const ShapeSpec cross = ShapeSpec::swiss_cross(1.0, 2.0);
  const auto tc = boundary_crossing(cross, pt({0.5, 0.0}), 1, +1, 10.0);
  REQUIRE(tc.has_value());
  CHECK(*tc == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("diameter and bounding box") {
  CHECK(diameter(ShapeSpec::parallelepiped({1, 1})) == doctest::Approx(2 * std::sqrt(2.0)));
  CHECK(diameter(ShapeSpec::stadium(1, 2)) == doctest::Approx(6.0));
  CHECK(diameter(ShapeSpec::ellipsoid({0.5, 1, 2})) == doctest::Approx(4.0));
  const auto [lo, hi] = bounding_box(ShapeSpec::swiss_cross(1, 2));
  CHECK(lo[0] == doctest::Approx(-3.0));
  CHECK(hi[1] == doctest::Approx(3.0));
  CHECK(star_tolerance(ShapeSpec::ball(1, 2)) == doctest::Approx(2e-9));
}

TEST_CASE("polygon vertices run counter-clockwise") {
  const auto v = polygon_vertices(triangle().halfspaces());
  REQUIRE(v.size() == 3);
  CHECK(detail::polygon_area(v) > 0.0);
}

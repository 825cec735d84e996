#include <doctest.h>

#include <charconv>
#include <cmath>
#include <string>

#include "spectral_bounds/error.hpp"
#include "spectral_bounds/format.hpp"
#include "spectral_bounds/report.hpp"
#include "spectral_bounds/report_io.hpp"

using namespace spectral_bounds;

namespace {

double to_double(const std::string& s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  REQUIRE(ec == std::errc());
  REQUIRE(ptr == s.data() + s.size());
  return v;
}

const char* kTriangle = R"({
  "kind": "polytope",
  "dimension": 2,
  "params": {"halfspaces": [
    {"normal": [-1, 0], "offset": 0},
    {"normal": [0, -1], "offset": 0},
    {"normal": [1, 1], "offset": 1}
  ]}
})";

}  // namespace

TEST_CASE("shortest round-trip formatting") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-2.5e-300) == "-2.5e-300");
  CHECK(format_double(std::nan("")) == "nan");
  CHECK(format_double(INFINITY) == "inf");
  for (double x : {1.0 / 3.0, 5.783185962946785, 1e-17, 123456789.123456789}) {
    CHECK(to_double(format_double(x)) == x);
  }
}

TEST_CASE("shape descriptors") {
  const ShapeSpec rect = parse_shape_json(R"({"kind": "rect", "params": {"half_axes": [1, 0.5]}})");
  CHECK(rect.kind() == ShapeKind::parallelepiped);
  CHECK(rect.half_axes()[1] == 0.5);
  const ShapeSpec ball = parse_shape_json(R"({"kind": "ball", "dimension": 3, "params": {"radius": 2}})");
  CHECK(ball.dimension() == 3);
  CHECK(ball.radius() == 2.0);
  const ShapeSpec tri = parse_shape_json(kTriangle);
  CHECK(measures(tri).volume == doctest::Approx(0.5));
  const ShapeSpec top = parse_shape_json(
      R"({"kind": "polygon", "halfspaces": [{"normal": [1, 0], "offset": 1}, {"normal": [-1, 0], "offset": 1},
          {"normal": [0, 1], "offset": 1}, {"normal": [0, -1], "offset": 1}]})");
  CHECK(measures(top).volume == doctest::Approx(4.0));

  for (const ShapeSpec& s : {rect, ball, tri, ShapeSpec::stadium(1, 2), ShapeSpec::swiss_cross(0.5, 3),
                             ShapeSpec::ellipsoid({0.5, 1, 2})}) {
    CAPTURE(s.label());
    const ShapeSpec again = parse_shape_json(shape_to_json(s));
    CHECK(again.label() == s.label());
    CHECK(measures(again).volume == doctest::Approx(measures(s).volume).epsilon(1e-15));
  }
}

TEST_CASE("malformed descriptors") {
  CHECK_THROWS_AS(parse_shape_json("{"), InputError);
  CHECK_THROWS_AS(parse_shape_json(R"({"params": {}})"), InputError);
  CHECK_THROWS_AS(parse_shape_json(R"({"kind": "teapot"})"), InputError);
  CHECK_THROWS_AS(parse_shape_json(R"({"kind": "stadium", "params": {"a": 1}})"), InputError);
  CHECK_THROWS_AS(parse_shape_json(R"({"kind": "rect", "params": {"half_axes": "wide"}})"), InputError);
  CHECK_THROWS_AS(parse_shape_json(R"({"kind": "ball", "dimension": 2.5, "params": {"radius": 1}})"), InputError);
  CHECK_THROWS_AS(parse_shape_json(R"({"kind": "polytope", "params": {}})"), InputError);
  CHECK_THROWS_WITH(parse_shape_json(
                        R"({"kind": "polytope", "halfspaces": [{"normal": [1, 0], "offset": 1}, {"normal": [-1, 0], "offset": 1}, {"normal": [0, 1], "offset": 1}]})"),
                    "unbounded domain");
}

TEST_CASE("inline parameters") {
  CHECK(shape_from_params("rect", std::vector<double>{1, 1}, 0).dimension() == 2);
  CHECK(shape_from_params("box", std::vector<double>{1}, 3).half_axes().size() == 3);
  CHECK(shape_from_params("ball", std::vector<double>{1}, 3).dimension() == 3);
  CHECK(shape_from_params("disc", std::vector<double>{1}, 0).dimension() == 2);
  CHECK(shape_from_params("stadium", std::vector<double>{1, 2}, 0).b() == 2.0);
  CHECK_THROWS_AS(shape_from_params("stadium", std::vector<double>{1}, 0), InputError);
  CHECK_THROWS_AS(shape_from_params("cross", std::vector<double>{1, 2}, 3), InputError);
  CHECK_THROWS_AS(shape_from_params("rect", std::vector<double>{1, 2}, 3), InputError);
  CHECK_THROWS_AS(shape_from_params("polygon", std::vector<double>{1}, 2), InputError);
}

TEST_CASE("number lists") {
  const auto v = parse_number_list("1,0.5, 2e-1");
  REQUIRE(v.size() == 3);
  CHECK(v[2] == 0.2);
  CHECK_THROWS_AS(parse_number_list("1,,2"), InputError);
  CHECK_THROWS_AS(parse_number_list("1;2"), InputError);
  CHECK_THROWS_AS(parse_number_list(""), InputError);
}

TEST_CASE("CSV round trip keeps every digit") {
  const BoundReport rep = build_report(ShapeSpec::stadium(1, 0.7));
  const CsvTable t = parse_csv(report_to_csv(rep));
  REQUIRE(t.header == std::vector<std::string>{"name", "kind", "target", "value", "applicable", "discrepancy"});
  REQUIRE(t.rows.size() == rep.bounds.size());
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    CHECK(t.rows[i][t.column("name")] == rep.bounds[i].name);
    CHECK(to_double(t.rows[i][t.column("value")]) == rep.bounds[i].value);
  }
  CHECK_THROWS_AS(t.column("nonexistent"), InputError);
}

TEST_CASE("inapplicable bounds leave an empty cell") {
  const BoundReport rep = build_report(ShapeSpec::swiss_cross(1, 1));
  const CsvTable t = parse_csv(report_to_csv(rep));
  bool seen = false;
  for (const auto& row : t.rows) {
    if (row[t.column("name")] == "upper_corol") {
      CHECK(row[t.column("value")].empty());
      CHECK(row[t.column("applicable")] == "false");
      seen = true;
    }
  }
  CHECK(seen);
}

TEST_CASE("JSON is byte-identical across runs") {
  const std::string a = report_to_json(build_report(ShapeSpec::ellipsoid({0.4, 1})));
  const std::string b = report_to_json(build_report(ShapeSpec::ellipsoid({0.4, 1})));
  CHECK(a == b);
  CHECK(a.find("\"upper_main\"") != std::string::npos);
  CHECK(a.find("\"shape\"") < a.find("\"bounds\""));
}

TEST_CASE("table lists every bound") {
  const BoundReport rep = build_report(ShapeSpec::parallelepiped({1, 1}));
  const std::string table = report_to_table(rep);
  for (const BoundValue& b : rep.bounds) CHECK(table.find(b.name) != std::string::npos);
}

#include <doctest.h>

#include <charconv>

#include "spectral_bounds/error.hpp"
#include "spectral_bounds/report_io.hpp"
#include "spectral_bounds/sweep.hpp"

using namespace spectral_bounds;

TEST_CASE("range parsing") {
  const auto v = parse_range("0.05:1:0.05").values();
  REQUIRE(v.size() == 20);
  CHECK(v.front() == doctest::Approx(0.05));
  CHECK(v.back() == doctest::Approx(1.0));
  CHECK(parse_range("0:4:0.1").values().size() == 41);
  CHECK(parse_range("2:2:1").values().size() == 1);
  CHECK_THROWS_AS(parse_range("0:1"), InputError);
  CHECK_THROWS_AS(parse_range("0:1:0"), InputError);
  CHECK_THROWS_AS(parse_range("0:1:-0.1"), InputError);
  CHECK_THROWS_AS(parse_range("a:1:0.1"), InputError);
}

TEST_CASE("family members") {
  CHECK(family_member(ShapeKind::parallelepiped, 0.3).half_axes() == std::vector<double>{0.3, 1.0});
  CHECK(family_member(ShapeKind::stadium, 2.0).b() == 2.0);
  CHECK(family_member(ShapeKind::swiss_cross, 0.0).b() == 0.0);
  CHECK_THROWS_AS(family_member(ShapeKind::polytope, 1.0), InputError);
}

TEST_CASE("stadium sweep: upper_main beats afconj up to about 2.6") {
  const auto rows = run_sweep(ShapeKind::stadium, parse_range("0:4:0.1").values());
  REQUIRE(rows.size() == 41);
  for (const SweepRow& r : rows) {
    const bool beats = r.value("upper_main") <= r.value("afconj") * (1 + 1e-12);
    CHECK(beats == (r.c <= 2.6 + 1e-9));
  }
}

TEST_CASE("rectangle sweep uses the exact spectrum") {
  const auto rows = run_sweep(ShapeKind::parallelepiped, parse_range("0.05:1:0.05").values());
  for (const SweepRow& r : rows) {
    CHECK(r.reference_source == "exact");
    REQUIRE(r.lambda1_reference.has_value());
    CHECK(*r.lambda1_reference <= r.value("upper_main"));
  }
  // upper_main, upper_corol and inradius_ball coincide on the square.
  CHECK(rows.back().tie);
  CHECK(rows.back().winner == "inradius_ball");
  CHECK(rows.front().winner == "afconj");
}

TEST_CASE("winner is the smallest applicable upper bound") {
  const auto rows = run_sweep(ShapeKind::swiss_cross, std::vector<double>{0.5, 2.0, 4.5});
  for (const SweepRow& r : rows) {
    double best = INFINITY;
    for (const BoundValue& b : r.bounds) {
      if (b.applicable && b.target == BoundTarget::lambda1 && b.kind != BoundKind::lower) best = std::min(best, b.value);
    }
    CHECK(r.value(r.winner) == best);
  }
  CHECK(rows[0].winner == "upper_main");
  CHECK(rows[2].winner == "afconj");
}

TEST_CASE("parallel sweep gives identical rows in order") {
  const auto cs = parse_range("0.1:3:0.1").values();
  SweepOptions serial, parallel;
  parallel.jobs = 4;
  const std::string a = sweep_to_csv(run_sweep(ShapeKind::stadium, cs, serial));
  const std::string b = sweep_to_csv(run_sweep(ShapeKind::stadium, cs, parallel));
  CHECK(a == b);
}

TEST_CASE("sweep CSV round trip") {
  const auto rows = run_sweep(ShapeKind::ellipsoid, parse_range("0.1:1:0.1").values());
  const CsvTable t = parse_csv(sweep_to_csv(rows));
  REQUIRE(t.rows.size() == rows.size());
  CHECK(t.header.front() == "c");
  CHECK(t.header.back() == "tie");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string& cell = t.rows[i][t.column("upper_main")];
    double v = 0.0;
    std::from_chars(cell.data(), cell.data() + cell.size(), v);
    CHECK(v == rows[i].value("upper_main"));
    CHECK(t.rows[i][t.column("winner")] == rows[i].winner);
  }
}

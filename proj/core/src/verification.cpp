#include "spectral_bounds/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "spectral_bounds/bounds.hpp"
#include "spectral_bounds/error.hpp"
#include "spectral_bounds/fmin.hpp"
#include "spectral_bounds/format.hpp"
#include "spectral_bounds/geometry.hpp"
#include "spectral_bounds/oracle.hpp"
#include "spectral_bounds/report.hpp"
#include "spectral_bounds/special.hpp"
#include "spectral_bounds/sweep.hpp"

namespace spectral_bounds {

namespace {

constexpr int kDefaultOracleNodes = 128;
constexpr int kPolygonCount = 50;
constexpr unsigned kPolygonSeed = 20240611u;

double rel_diff(double value, double reference) {
  return std::abs(value - reference) / std::abs(reference);
}

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(6);
  s << x;
  return s.str();
}

/// Convex polygons cut out by 3 to 8 random support lines.
std::vector<ShapeSpec> random_polygons(int count, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> sides(3, 8);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> offset(0.5, 1.5);

  std::vector<ShapeSpec> out;
  while (static_cast<int>(out.size()) < count) {
    const int k = sides(rng);
    std::vector<double> angles(k);
    for (double& a : angles) a = angle(rng);
    std::sort(angles.begin(), angles.end());
    double max_gap = angles.front() + 2.0 * std::numbers::pi - angles.back();
    for (int i = 1; i < k; ++i) max_gap = std::max(max_gap, angles[i] - angles[i - 1]);
    if (max_gap > std::numbers::pi - 0.2) continue;

    std::vector<HalfSpace> hs;
    for (double a : angles) {
      Point n(2);
      n << std::cos(a), std::sin(a);
      hs.push_back({n, offset(rng)});
    }
    try {
      ShapeSpec shape = ShapeSpec::polytope(std::move(hs));
      const DomainMeasures m = measures(shape);
      if (m.inradius < 0.05 * diameter(shape)) continue;
      out.push_back(std::move(shape));
    } catch (const InputError&) {
      continue;
    }
  }
  return out;
}

class Context {
 public:
  explicit Context(const VerifyOptions& options) : options_(options) {
    scale_ = oracle_tolerance_scale(options.oracle_nodes);
  }

  const VerifyOptions& options() const { return options_; }
  double scale() const { return scale_; }

  /// Oracle tolerance on top of the extrapolation error estimate.
  double budget(double base) const { return base * scale_; }

  const SpectralEstimate& oracle(const ShapeSpec& shape, int nodes) {
    const std::string key = shape.label() + "#" + std::to_string(nodes);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    OracleOptions o;
    o.nodes = nodes;
    o.torsion = true;
    return cache_.emplace(key, estimate_spectrum(shape, o)).first->second;
  }

  const SpectralEstimate& oracle(const ShapeSpec& shape) {
    return oracle(shape, shape.dimension() == 3 ? std::max(8, options_.oracle_nodes / 8) : options_.oracle_nodes);
  }

  const std::vector<ShapeSpec>& polygons() {
    if (polygons_.empty()) polygons_ = random_polygons(kPolygonCount, kPolygonSeed);
    return polygons_;
  }

  const SpectralEstimate& polygon_oracle(std::size_t index) {
    if (polygon_estimates_.size() != polygons().size()) polygon_estimates_.resize(polygons().size());
    auto& slot = polygon_estimates_[index];
    if (!slot) {
      OracleOptions o;
      o.nodes = std::max(16, options_.oracle_nodes / 2);
      slot = estimate_spectrum(polygons_[index], o);
    }
    return *slot;
  }

 private:
  VerifyOptions options_;
  double scale_ = 1.0;
  std::map<std::string, SpectralEstimate> cache_;
  std::vector<ShapeSpec> polygons_;
  std::vector<std::optional<SpectralEstimate>> polygon_estimates_;
};

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!passed) detail << "; ";
      else detail.str("");
      passed = false;
      detail << what;
    }
  }
};

// 1
void check_ball_equality(Context& ctx, Outcome& out) {
  double worst_closed = 0.0;
  double worst_mesh = 0.0;
  for (int d : {2, 3}) {
    for (double r : {0.5, 1.0, 2.0}) {
      const ShapeSpec ball = ShapeSpec::ball(r, d);
      ReportOptions ro;
      ro.resolution = ctx.options().resolution;
      const BoundReport rep = build_report(ball, ro);
      const auto exact = exact_spectrum(ball);
      const std::vector<std::pair<std::string, double>> targets = {
          {"upper_main", exact->lambda1},  {"upper_corol", exact->lambda1},
          {"pw", exact->lambda1},          {"pw_explicit", exact->lambda1},
          {"afconj", exact->lambda1},      {"lambda2_upper", exact->lambda2},
          {"gap_upper", exact->lambda2 - exact->lambda1}, {"torsion_lower", *exact->torsion}};
      for (const auto& [name, ref] : targets) {
        const BoundValue* b = rep.find(name);
        if (b == nullptr || !b->applicable) {
          out.require(d != 2, name + " not applicable on " + ball.label());
          continue;
        }
        const double err = rel_diff(b->value, ref);
        // F-based bounds go through the curved boundary quadrature.
        const bool mesh_based = name == "upper_main" || name == "torsion_lower";
        const double tol = mesh_based ? 1e-6 : 1e-9;
        (mesh_based ? worst_mesh : worst_closed) = std::max(mesh_based ? worst_mesh : worst_closed, err);
        out.require(err <= tol, name + " on " + ball.label() + " off by " + fmt(err));
      }
    }
  }
  if (out.passed) {
    out.detail << "max rel error " << fmt(worst_closed) << " (closed form), " << fmt(worst_mesh) << " (via F)";
  }
}

// 2
void check_closed_form_f(Context& ctx, Outcome& out) {
  struct Case {
    ShapeSpec shape;
    double expected;
    bool flat;
  };
  auto box_f = [](const std::vector<double>& a) {
    double vol = 1.0, s = 0.0;
    for (double x : a) {
      vol *= 2.0 * x;
      s += 1.0 / (x * x);
    }
    return vol * s;
  };
  auto ellipse_f = [](double a1, double a2) {
    return std::numbers::pi * a1 * a2 * (1.0 / (a1 * a1) + 1.0 / (a2 * a2));
  };
  std::vector<Case> cases;
  for (const auto& a : std::vector<std::vector<double>>{{1, 1}, {0.3, 1}, {1, 2}, {1, 1, 1}, {1, 2, 3}, {0.2, 0.5, 1}}) {
    cases.push_back({ShapeSpec::parallelepiped(a), box_f(a), true});
  }
  for (const auto& [a1, a2] : std::vector<std::pair<double, double>>{{0.5, 1}, {0.2, 1}, {1, 2}}) {
    cases.push_back({ShapeSpec::ellipsoid({a1, a2}), ellipse_f(a1, a2), false});
  }
  for (double c : {0.5, 1.0, 2.0}) {
    const ShapeSpec s = ShapeSpec::stadium(1.0, c);
    cases.push_back({s, *F_closed_form(s), false});
  }
  for (double c : {1.0, 2.0, 4.0}) {
    cases.push_back({ShapeSpec::swiss_cross(1.0, c), 8.0 * (1.0 + c + c * c) / (1.0 + c), true});
  }

  double worst_flat = 0.0, worst_curved = 0.0;
  for (const Case& cs : cases) {
    const BoundaryMesh mesh = boundary_mesh(cs.shape, ctx.options().resolution);
    // Start away from the symmetry center so Newton has work to do.
    Point start = default_center(cs.shape);
    const auto [lo, hi] = bounding_box(cs.shape);
    double half = (hi - lo).minCoeff() / 2.0;
    if (cs.shape.kind() == ShapeKind::swiss_cross) half = cs.shape.a();
    for (int i = 0; i < start.size(); ++i) start[i] += 0.2 * half * (i % 2 == 0 ? 1.0 : -0.5);
    const FResult r = minimize_F(mesh, start);
    const double err = rel_diff(r.value, cs.expected);
    const double tol = cs.flat ? 1e-10 : 1e-6;
    (cs.flat ? worst_flat : worst_curved) = std::max(cs.flat ? worst_flat : worst_curved, err);
    out.require(r.converged, cs.shape.label() + " minimization did not converge");
    out.require(err <= tol, cs.shape.label() + ": F " + fmt(r.value) + " vs " + fmt(cs.expected));
  }
  if (out.passed) {
    out.detail << cases.size() << " shapes, max rel error " << fmt(worst_flat) << " (flat), " << fmt(worst_curved)
               << " (curved)";
  }
}

// 3
void check_rectangle_discrepancy(Context& ctx, Outcome& out) {
  const double j = first_zero(0.0);
  const double target = 1.0 - std::numbers::pi * std::numbers::pi / (2.0 * j * j);
  double worst = 0.0;
  for (double c : {0.01, 0.1, 0.5, 1.0}) {
    ReportOptions ro;
    ro.resolution = ctx.options().resolution;
    const BoundReport rep = build_report(ShapeSpec::parallelepiped({c, 1.0}), ro);
    const double d = discrepancy(*rep.find("upper_main"), *rep.lambda1_reference);
    worst = std::max(worst, std::abs(d - target));
    out.require(std::abs(d - target) <= 1e-12, "c=" + fmt(c) + ": discrepancy " + fmt(d));
  }
  if (out.passed) out.detail << "discrepancy " << fmt(target) << " at every c, max deviation " << fmt(worst);
}

// 4
void check_square_conjecture(Context&, Outcome& out) {
  const ShapeSpec square = ShapeSpec::parallelepiped({1.0, 1.0});
  const BoundValue af = afconj_upper(measures(square));
  const double exact = std::numbers::pi * std::numbers::pi / 2.0;
  const double d = (af.value - exact) / af.value;
  out.require(std::abs(d - 0.259) <= 0.005, "afconj discrepancy " + fmt(d));
  if (out.passed) out.detail << "afconj discrepancy " << fmt(100.0 * d) << "%";
}

// 5
void check_crossovers(Context& ctx, Outcome& out) {
  SweepOptions so;
  so.resolution = ctx.options().resolution;
  auto sweep = [&](ShapeKind kind, double start, double stop, double step) {
    const std::vector<double> cs = RangeSpec{start, stop, step}.values();
    return run_sweep(kind, cs, so);
  };
  auto below = [](double x, double y) { return x < y * (1.0 - 1e-9); };
  auto not_above = [](double x, double y) { return x <= y * (1.0 + 1e-9); };

  // Rectangles: the set where a bound beats afconj is [c*, 1].
  const auto rect = sweep(ShapeKind::parallelepiped, 0.01, 1.0, 0.01);
  auto lower_endpoint = [&](const std::string& name) -> std::optional<double> {
    std::optional<double> first;
    for (const SweepRow& row : rect) {
      const bool hit = below(row.value(name), row.value("afconj"));
      if (hit && !first) first = row.c;
      if (!hit && first) return std::nullopt;  // not contiguous up to c = 1
    }
    return first;
  };
  const auto rect_main = lower_endpoint("upper_main");
  const auto rect_corol = lower_endpoint("upper_corol");
  out.require(rect_main && std::abs(*rect_main - 0.30) <= 0.05,
              "rectangle upper_main endpoint " + (rect_main ? fmt(*rect_main) : std::string("none")));
  out.require(rect_corol && std::abs(*rect_corol - 0.70) <= 0.05,
              "rectangle upper_corol endpoint " + (rect_corol ? fmt(*rect_corol) : std::string("none")));

  // Ellipses: upper_main never loses; upper_corol wins on an initial segment.
  const auto ell = sweep(ShapeKind::ellipsoid, 0.01, 1.0, 0.01);
  bool main_everywhere = true;
  std::optional<double> ell_corol;
  bool contiguous = true;
  for (const SweepRow& row : ell) {
    main_everywhere = main_everywhere && not_above(row.value("upper_main"), row.value("afconj"));
    const bool hit = below(row.value("upper_corol"), row.value("afconj"));
    if (hit) {
      if (ell_corol && row.c - *ell_corol > 0.015) contiguous = false;
      ell_corol = row.c;
    }
  }
  out.require(main_everywhere, "ellipse upper_main exceeds afconj somewhere");
  out.require(contiguous && ell_corol && std::abs(*ell_corol - 0.10) <= 0.03,
              "ellipse upper_corol endpoint " + (ell_corol ? fmt(*ell_corol) : std::string("none")));

  // Stadium and cross: upper_main wins on [0, c*].
  auto upper_endpoint = [&](const std::vector<SweepRow>& rows) -> std::optional<double> {
    std::optional<double> last;
    bool ended = false;
    for (const SweepRow& row : rows) {
      const bool hit = not_above(row.value("upper_main"), row.value("afconj"));
      if (hit && ended) return std::nullopt;
      if (hit) last = row.c;
      else ended = true;
    }
    return last;
  };
  const auto stad = sweep(ShapeKind::stadium, 0.0, 4.0, 0.1);
  const auto stad_main = upper_endpoint(stad);
  out.require(stad_main && std::abs(*stad_main - 2.6) <= 0.1 + 1e-9,
              "stadium upper_main endpoint " + (stad_main ? fmt(*stad_main) : std::string("none")));
  bool corol_worst = true;
  for (const SweepRow& row : stad) {
    if (row.c == 0.0) continue;  // the disc, where all coincide
    corol_worst = corol_worst && below(row.value("afconj"), row.value("upper_corol")) &&
                  below(row.value("pw"), row.value("upper_corol"));
  }
  out.require(corol_worst, "stadium upper_corol not above afconj and pw everywhere");

  const auto cross = sweep(ShapeKind::swiss_cross, 0.0, 5.0, 0.1);
  const auto cross_main = upper_endpoint(cross);
  out.require(cross_main && std::abs(*cross_main - 3.8) <= 0.1 + 1e-9,
              "cross upper_main endpoint " + (cross_main ? fmt(*cross_main) : std::string("none")));

  if (out.passed) {
    out.detail << "rectangle main from " << fmt(*rect_main) << ", corol from " << fmt(*rect_corol)
               << "; ellipse corol up to " << fmt(*ell_corol) << "; stadium main up to " << fmt(*stad_main)
               << "; cross main up to " << fmt(*cross_main);
  }
}

// 6
void check_ellipse_one_percent(Context& ctx, Outcome& out) {
  const double budget = ctx.budget(0.005);
  std::ostringstream d;
  for (double c : {0.5, 0.7, 1.0}) {
    const ShapeSpec e = ShapeSpec::ellipsoid({c, 1.0});
    const SpectralEstimate& est = ctx.oracle(e);
    const FResult F = compute_F(e, ctx.options().resolution);
    const BoundValue main = upper_main(F.value, measures(e), ball_constants(2));
    const double disc = discrepancy(main, est.lambda1);
    out.require(est.error_estimate <= budget, "c=" + fmt(c) + ": oracle error " + fmt(est.error_estimate));
    out.require(disc <= 0.01 + budget, "c=" + fmt(c) + ": discrepancy " + fmt(disc));
    d << (c == 0.5 ? "" : ", ") << "c=" << fmt(c) << " " << fmt(100.0 * disc) << "%";
  }
  if (out.passed) out.detail << d.str();
}

// 7
void check_swiss_cross(Context& ctx, Outcome& out) {
  const ShapeSpec cross = ShapeSpec::swiss_cross(1.0, 2.0);
  // nodes intervals across the arm width 2a
  const SpectralEstimate& est = ctx.oracle(cross, ctx.options().oracle_nodes);
  const FResult F = compute_F(cross, ctx.options().resolution);
  const double disc = discrepancy(upper_main(F.value, measures(cross), ball_constants(2)), est.lambda1);
  out.require(disc < 0.39, "discrepancy " + fmt(disc));
  if (out.passed) {
    out.detail << "discrepancy " << fmt(100.0 * disc) << "% (lambda1 " << fmt(est.lambda1) << ", oracle error "
               << fmt(est.error_estimate) << ")";
  }
}

// 8
void check_sandwich(Context& ctx, Outcome& out) {
  const auto& polys = ctx.polygons();
  double worst_margin = 1.0;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const SpectralEstimate& est = ctx.polygon_oracle(i);
    ReportOptions ro;
    ro.resolution = ctx.options().resolution;
    const BoundReport rep = build_report(polys[i], ro);
    const double tol = est.error_estimate + ctx.budget(0.005);
    double lower = -INFINITY, upper = INFINITY;
    for (const BoundValue& b : rep.bounds) {
      if (!b.applicable || b.target != BoundTarget::lambda1) continue;
      if (b.kind == BoundKind::lower) lower = std::max(lower, b.value);
      if (b.kind == BoundKind::upper) upper = std::min(upper, b.value);
    }
    const double lam = est.lambda1;
    out.require(lower <= lam * (1.0 + tol), "polygon " + std::to_string(i) + ": lower bound " + fmt(lower) +
                                                " above oracle " + fmt(lam));
    out.require(lam <= upper * (1.0 + tol), "polygon " + std::to_string(i) + ": oracle " + fmt(lam) +
                                                " above upper bound " + fmt(upper));
    worst_margin = std::min({worst_margin, (lam - lower) / lam, (upper - lam) / upper});
  }
  if (out.passed) {
    out.detail << polys.size() << " polygons, smallest relative gap to a bound " << fmt(worst_margin);
  }
}

// 9
void check_isoperimetric(Context& ctx, Outcome& out) {
  int count = 0;
  double worst = INFINITY;
  auto test = [&](const ShapeSpec& shape, double lambda1, double tol) {
    const DomainMeasures m = measures(shape);
    const InequalitySides s = isoperimetric_growth_lhs_rhs(m, lambda1, ball_constants(shape.dimension()));
    // rhs scales like sqrt(lambda1)
    out.require(s.lhs >= s.rhs * (1.0 - 0.5 * tol), shape.label() + ": lhs " + fmt(s.lhs) + " < rhs " + fmt(s.rhs));
    worst = std::min(worst, s.lhs / s.rhs - 1.0);
    ++count;
  };

  const std::vector<ShapeSpec> exact_shapes = {
      ShapeSpec::parallelepiped({1, 1}),    ShapeSpec::parallelepiped({0.2, 1}), ShapeSpec::parallelepiped({0.05, 1}),
      ShapeSpec::parallelepiped({1, 1, 1}), ShapeSpec::parallelepiped({0.2, 1, 1}), ShapeSpec::ball(1.0, 2),
      ShapeSpec::ball(1.0, 3)};
  for (const ShapeSpec& s : exact_shapes) test(s, exact_spectrum(s)->lambda1, 1e-12);

  const std::vector<ShapeSpec> oracle_shapes = {ShapeSpec::ellipsoid({0.5, 1}), ShapeSpec::ellipsoid({0.7, 1}),
                                                ShapeSpec::stadium(1.0, 1.0)};
  for (const ShapeSpec& s : oracle_shapes) {
    const SpectralEstimate& est = ctx.oracle(s);
    test(s, est.lambda1, est.error_estimate + ctx.budget(0.005));
  }
  const auto& polys = ctx.polygons();
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const SpectralEstimate& est = ctx.polygon_oracle(i);
    test(polys[i], est.lambda1, est.error_estimate + ctx.budget(0.005));
  }

  int reverse = 0;
  for (double c : {1.0, 0.2, 0.05}) {
    for (const auto& a : std::vector<std::vector<double>>{{c, 1}, {c, 1, 1}, {c, c, 1}}) {
      const ShapeSpec box = ShapeSpec::parallelepiped(a);
      const bool ok =
          parallelepiped_reverse_check(measures(box), exact_spectrum(box)->lambda1, ball_constants(box.dimension()));
      out.require(ok, "reverse inequality fails on " + box.label());
      ++reverse;
    }
  }
  if (out.passed) {
    out.detail << count << " domains, smallest lhs/rhs - 1 = " << fmt(worst) << "; reverse inequality on " << reverse
               << " boxes";
  }
}

// 10
void check_xi_independence(Context& ctx, Outcome& out) {
  std::vector<ShapeSpec> shapes = {
      ShapeSpec::parallelepiped({1, 2}),    ShapeSpec::parallelepiped({0.2, 1}),
      ShapeSpec::parallelepiped({1, 2, 3}), ShapeSpec::ellipsoid({0.5, 1}),
      ShapeSpec::ellipsoid({0.5, 1, 2}),    ShapeSpec::stadium(1.0, 1.0),
      ShapeSpec::stadium(1.0, 0.5),         ShapeSpec::swiss_cross(1.0, 2.0),
      ShapeSpec::swiss_cross(1.0, 0.5),     ShapeSpec::ball(1.0, 2),
      ShapeSpec::ball(0.5, 3),              ShapeSpec::ball(2.0, 2)};
  const auto& polys = ctx.polygons();
  shapes.insert(shapes.end(), polys.begin(), polys.begin() + 3);

  std::mt19937_64 rng(7);
  double worst_volume = 0.0;
  for (const ShapeSpec& shape : shapes) {
    const BoundaryMesh mesh = boundary_mesh(shape, ctx.options().resolution);
    const DomainMeasures m = measures(shape);
    const auto [lo, hi] = bounding_box(shape);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int accepted = 0, tries = 0;
    while (accepted < 20 && tries < 100000) {
      ++tries;
      Point xi(shape.dimension());
      for (int i = 0; i < xi.size(); ++i) xi[i] = lo[i] + u(rng) * (hi[i] - lo[i]);
      if (min_support(mesh, xi) <= 1e-3 * mesh.diameter) continue;
      ++accepted;
      const double err = rel_diff(support_integral(mesh, xi) / shape.dimension(), m.volume);
      worst_volume = std::max(worst_volume, err);
      out.require(err <= 1e-9, shape.label() + ": support integral off by " + fmt(err));
    }
    out.require(accepted == 20, shape.label() + ": too few admissible centers");

    const double F = compute_F(shape, ctx.options().resolution).value;
    const double floor = F_faber_krahn_floor(shape.dimension(), m.volume);
    const double gap = (F - floor) / floor;
    if (shape.kind() == ShapeKind::ball) {
      out.require(std::abs(gap) <= 1e-8, shape.label() + ": F differs from the floor by " + fmt(gap));
    } else {
      out.require(gap > 1e-8, shape.label() + ": F not above the floor (" + fmt(gap) + ")");
    }
  }
  if (out.passed) {
    out.detail << shapes.size() << " shapes x 20 centers, max volume error " << fmt(worst_volume)
               << "; F floor strict off balls";
  }
}

// 11
void check_special_functions(Context& ctx, Outcome& out) {
  for (double nu : {0.0, 1.0}) {
    const double ref = first_zero(nu, 0.1);
    double spread = 0.0;
    for (double step : {0.2, 0.05, 0.01, 0.001}) spread = std::max(spread, rel_diff(first_zero(nu, step), ref));
    out.require(spread <= 1e-12, "first_zero(" + fmt(nu) + ") moves by " + fmt(spread) + " under refinement");
  }
  double worst = 0.0;
  for (double x = 0.5; x <= 40.0 + 1e-12; x += 0.125) {
    const double w = bessel_j(1, x) * bessel_y(0, x) - bessel_j(0, x) * bessel_y(1, x);
    const double expected = 2.0 / (std::numbers::pi * x);
    worst = std::max(worst, std::abs(w - expected));
  }
  out.require(worst <= 1e-10, "Wronskian residual " + fmt(worst));
  const double pw0 = std::abs(pw_root(0.0) - first_zero(0.0));
  out.require(pw0 <= 1e-10, "pw_root(0) off by " + fmt(pw0));

  const SpectralEstimate& disc = ctx.oracle(ShapeSpec::ball(1.0, 2));
  const double torsion_err = rel_diff(*disc.torsion, ball_constants(2).torsion_B1);
  out.require(torsion_err <= ctx.budget(0.005), "disc torsion off by " + fmt(torsion_err));
  if (out.passed) {
    out.detail << "Wronskian residual " << fmt(worst) << ", disc torsion rel error " << fmt(torsion_err);
  }
}

// 12
void check_oracle_self_test(Context& ctx, Outcome& out) {
  double worst = 0.0;
  for (const auto& a : std::vector<std::vector<double>>{{1, 1}, {1, 2}, {0.5, 1}, {1, 1, 1}}) {
    const ShapeSpec box = ShapeSpec::parallelepiped(a);
    const SpectralEstimate& est = ctx.oracle(box);
    const std::vector<double> exact = box_eigenvalues(a, 2);
    const double e1 = rel_diff(est.lambda1, exact[0]);
    const double e2 = rel_diff(est.lambda2, exact[1]);
    worst = std::max({worst, e1, e2});
    out.require(e1 <= ctx.budget(5e-4) && e2 <= ctx.budget(5e-4),
                box.label() + ": oracle off by " + fmt(e1) + ", " + fmt(e2));
  }

  const std::vector<ShapeSpec> convex = {
      ShapeSpec::parallelepiped({1, 1}), ShapeSpec::parallelepiped({1, 2}), ShapeSpec::parallelepiped({0.5, 1}),
      ShapeSpec::parallelepiped({1, 1, 1}), ShapeSpec::ellipsoid({0.5, 1}), ShapeSpec::ellipsoid({0.7, 1}),
      ShapeSpec::ellipsoid({1, 1}), ShapeSpec::ball(1.0, 2), ShapeSpec::stadium(1.0, 1.0)};
  for (const ShapeSpec& shape : convex) {
    const SpectralEstimate& est = ctx.oracle(shape);
    const DomainMeasures m = measures(shape);
    const BallConstants c = ball_constants(shape.dimension());
    const double tol = est.error_estimate + ctx.budget(0.005);
    const double l2 = lambda2_upper(m, c).value;
    const double gap = gap_upper(m, c).value;
    out.require(est.lambda2 <= l2 * (1.0 + tol), shape.label() + ": lambda2 " + fmt(est.lambda2) + " above bound " + fmt(l2));
    out.require(est.lambda2 - est.lambda1 <= gap * (1.0 + tol),
                shape.label() + ": gap " + fmt(est.lambda2 - est.lambda1) + " above bound " + fmt(gap));
  }
  if (out.passed) {
    out.detail << "box spectra within " << fmt(100.0 * worst) << "%; lambda2 and gap bounds hold on " << convex.size()
               << " convex shapes";
  }
}

struct Entry {
  CheckInfo info;
  std::function<void(Context&, Outcome&)> run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {{"ball-equality", 1, "bounds are sharp on balls"}, check_ball_equality},
      {{"closed-form-f", 2, "F matches the closed forms"}, check_closed_form_f},
      {{"rectangle-discrepancy", 3, "rectangle discrepancy is aspect independent"}, check_rectangle_discrepancy},
      {{"square-conjecture", 4, "conjectured bound on the square"}, check_square_conjecture},
      {{"crossovers", 5, "crossover ranges against afconj"}, check_crossovers},
      {{"ellipse-one-percent", 6, "ellipse discrepancy within 1%"}, check_ellipse_one_percent},
      {{"swiss-cross-39", 7, "Swiss cross discrepancy below 39%"}, check_swiss_cross},
      {{"sandwich", 8, "random polygons sit between the bounds"}, check_sandwich},
      {{"isoperimetric", 9, "isoperimetric growth and reverse inequality"}, check_isoperimetric},
      {{"xi-independence", 10, "volume identity and F floor"}, check_xi_independence},
      {{"special-functions", 11, "Bessel zeros, Wronskian, disc torsion"}, check_special_functions},
      {{"oracle-self-test", 12, "oracle against exact spectra"}, check_oracle_self_test},
  };
  return entries;
}

}  // namespace

const std::vector<CheckInfo>& acceptance_checks() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const Entry& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

double oracle_tolerance_scale(int oracle_nodes) {
  if (oracle_nodes <= 0) throw InputError("oracle nodes must be positive");
  const double r = static_cast<double>(kDefaultOracleNodes) / oracle_nodes;
  return std::max(1.0, r * r);
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  for (const std::string& id : options.only) {
    const auto& reg = registry();
    if (std::none_of(reg.begin(), reg.end(), [&](const Entry& e) { return e.info.id == id; })) {
      throw InputError("unknown check: " + id);
    }
  }
  Context ctx(options);
  std::vector<CheckResult> results;
  for (const Entry& e : registry()) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), e.info.id) == options.only.end()) {
      continue;
    }
    const auto t0 = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      e.run(ctx, outcome);
    } catch (const std::exception& ex) {
      outcome.require(false, std::string("exception: ") + ex.what());
    }
    CheckResult r;
    r.id = e.info.id;
    r.number = e.info.number;
    r.passed = outcome.passed;
    r.detail = outcome.detail.str();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    results.push_back(std::move(r));
  }
  return results;
}

std::string verification_to_json(const std::vector<CheckResult>& results) {
  nlohmann::ordered_json j;
  j["passed"] = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const CheckResult& r : results) {
    checks.push_back({{"id", r.id},
                      {"number", r.number},
                      {"passed", r.passed},
                      {"seconds", std::round(r.seconds * 1000.0) / 1000.0},
                      {"detail", r.detail}});
  }
  j["checks"] = std::move(checks);
  return j.dump(2);
}

}  // namespace spectral_bounds

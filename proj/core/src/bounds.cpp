#include "spectral_bounds/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "spectral_bounds/error.hpp"

namespace spectral_bounds {

namespace {

constexpr double kPi = std::numbers::pi;

void require_planar(const DomainMeasures& m, const char* name) {
  if (m.dimension != 2) throw InputError(std::string(name) + " is a two-dimensional bound");
}

BoundValue make(std::string name, BoundKind kind, BoundTarget target, double value, Requirement requirement,
                std::string source) {
  return BoundValue{std::move(name), kind, target, value, requirement, std::move(source), true};
}

// Radius, surface and lambda1 of the ball with the same volume as Omega.
struct EquivalentBall {
  double radius;
  double volume;
  double surface;
  double lambda1;
};

EquivalentBall equivalent_ball(const DomainMeasures& m, const BallConstants& c) {
  const double d = m.dimension;
  const double r = std::pow(m.volume / c.volume_B1, 1.0 / d);
  return EquivalentBall{r, c.volume_B1 * std::pow(r, d), d * c.volume_B1 * std::pow(r, d - 1.0),
                        c.lambda1_B1 / (r * r)};
}

}  // namespace

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::upper: return "upper";
    case BoundKind::lower: return "lower";
    case BoundKind::upper_conjectured: return "upper_conjectured";
  }
  return "unknown";
}

std::string_view to_string(BoundTarget target) {
  switch (target) {
    case BoundTarget::lambda1: return "lambda1";
    case BoundTarget::lambda2: return "lambda2";
    case BoundTarget::gap: return "gap";
    case BoundTarget::torsion: return "torsion";
    case BoundTarget::isoperimetric_ratio: return "isoperimetric_ratio";
  }
  return "unknown";
}

std::string_view to_string(Requirement requirement) {
  switch (requirement) {
    case Requirement::any: return "any";
    case Requirement::convex: return "convex";
    case Requirement::star_shaped: return "star-shaped";
    case Requirement::planar_simply_connected: return "simply-connected-2D";
  }
  return "unknown";
}

bool satisfies(const ShapeSpec& shape, Requirement requirement) {
  switch (requirement) {
    case Requirement::any:
    case Requirement::star_shaped: return true;
    case Requirement::convex: return shape.is_convex();
    case Requirement::planar_simply_connected: return shape.dimension() == 2;
  }
  return false;
}

BoundValue faber_krahn(const DomainMeasures& m, const BallConstants& c) {
  const double value = c.lambda1_B1 * std::pow(c.volume_B1 / m.volume, 2.0 / m.dimension);
  return make("faber_krahn", BoundKind::lower, BoundTarget::lambda1, value, Requirement::any, "Faber-Krahn");
}

BoundValue upper_main(double F, const DomainMeasures& m, const BallConstants& c) {
  const double value = c.lambda1_B1 * F / (m.dimension * m.volume);
  return make("upper_main", BoundKind::upper, BoundTarget::lambda1, value, Requirement::star_shaped,
              "support-function bound, lambda1(B1) F / (d |Omega|)");
}

BoundValue upper_corol(const DomainMeasures& m, const BallConstants& c) {
  const double value = c.lambda1_B1 * m.surface / (m.dimension * m.inradius * m.volume);
  return make("upper_corol", BoundKind::upper, BoundTarget::lambda1, value, Requirement::convex,
              "inradius bound, lambda1(B1) |dOmega| / (d rho |Omega|)");
}

BoundValue inradius_ball_upper(const DomainMeasures& m, const BallConstants& c) {
  return make("inradius_ball", BoundKind::upper, BoundTarget::lambda1, c.lambda1_B1 / (m.inradius * m.inradius),
              Requirement::any, "domain monotonicity, lambda1(B_rho)");
}

BoundValue protter_lower(double inradius) {
  return make("protter", BoundKind::lower, BoundTarget::lambda1, kPi * kPi / (4.0 * inradius * inradius),
              Requirement::convex, "Protter, pi^2 / (4 rho^2)");
}

BoundValue polya_upper(const DomainMeasures& m) {
  require_planar(m, "polya");
  const double ratio = m.surface / m.volume;
  return make("polya", BoundKind::upper, BoundTarget::lambda1, kPi * kPi / 4.0 * ratio * ratio,
              Requirement::planar_simply_connected, "Polya 1960, (pi^2/4) |dOmega|^2 / |Omega|^2");
}

PwParameters pw_parameters(const DomainMeasures& m) {
  PwParameters p;
  p.deficit = 1.0 - 4.0 * kPi * m.volume / (m.surface * m.surface);
  if (p.deficit < -1e-12) throw InputError("isoperimetric deficit is negative: inconsistent measures");
  p.deficit = std::max(p.deficit, 0.0);
  p.ratio = std::sqrt(p.deficit);
  return p;
}

BoundValue pw_upper(const DomainMeasures& m) {
  require_planar(m, "pw");
  const double k = pw_root(pw_parameters(m).ratio);
  const double value = 4.0 * kPi * kPi / (m.surface * m.surface) * k * k;
  return make("pw", BoundKind::upper, BoundTarget::lambda1, value, Requirement::planar_simply_connected,
              "Payne-Weinberger, 4 pi^2 k^2 / |dOmega|^2");
}

BoundValue pw_explicit_upper(const DomainMeasures& m) {
  require_planar(m, "pw_explicit");
  const double j = first_zero(0.0);
  const double j1 = bessel_j(1.0, j);
  const double excess = m.surface * m.surface / (4.0 * kPi * m.volume) - 1.0;
  const double value = kPi * j * j / m.volume * (1.0 + (1.0 / (j1 * j1) - 1.0) * excess);
  return make("pw_explicit", BoundKind::upper, BoundTarget::lambda1, value, Requirement::planar_simply_connected,
              "Payne-Weinberger explicit form");
}

BoundValue afconj_upper(const DomainMeasures& m) {
  require_planar(m, "afconj");
  const double j = first_zero(0.0);
  const double value = kPi * j * j / m.volume +
                       kPi * kPi / 4.0 * (m.surface * m.surface - 4.0 * kPi * m.volume) / (m.volume * m.volume);
  return make("afconj", BoundKind::upper_conjectured, BoundTarget::lambda1, value,
              Requirement::planar_simply_connected, "Antunes-Freitas conjecture");
}

BoundValue lambda2_upper(const DomainMeasures& m, const BallConstants& c) {
  const double value = c.lambda2_B1 * m.surface / (m.dimension * m.inradius * m.volume);
  return make("lambda2_upper", BoundKind::upper, BoundTarget::lambda2, value, Requirement::convex,
              "inradius bound with Ashbaugh-Benguria ratio");
}

BoundValue gap_upper(const DomainMeasures& m, const BallConstants& c) {
  const double value = lambda2_upper(m, c).value - faber_krahn(m, c).value;
  return make("gap_upper", BoundKind::upper, BoundTarget::gap, value, Requirement::convex,
              "lambda2 bound minus Faber-Krahn");
}

BoundValue torsion_lower(double F, const DomainMeasures& m, const BallConstants& c) {
  const double value = m.dimension * m.volume * m.volume * c.torsion_B1 / (c.volume_B1 * F);
  return make("torsion_lower", BoundKind::lower, BoundTarget::torsion, value, Requirement::star_shaped,
              "support-function torsion bound");
}

InequalitySides isoperimetric_growth_lhs_rhs(const DomainMeasures& m, double lambda1, const BallConstants& c) {
  const double d = m.dimension;
  const EquivalentBall ball = equivalent_ball(m, c);
  InequalitySides sides;
  sides.lhs = m.surface / std::pow(m.volume, 1.0 - 1.0 / d);
  sides.rhs = ball.surface / std::pow(ball.volume, 1.0 - 1.0 / d) * std::sqrt(lambda1 / ball.lambda1) * kPi /
              (2.0 * std::sqrt(c.lambda1_B1));
  return sides;
}

InequalitySides parallelepiped_reverse_sides(const DomainMeasures& m, double lambda1, const BallConstants& c) {
  const double d = m.dimension;
  const EquivalentBall ball = equivalent_ball(m, c);
  InequalitySides sides;
  sides.lhs = m.surface / std::pow(m.volume, 1.0 - 1.0 / d);
  sides.rhs = ball.surface / std::pow(ball.volume, 1.0 - 1.0 / d) * std::sqrt(lambda1 / ball.lambda1) * 2.0 *
              std::sqrt(c.lambda1_B1) / (kPi * std::sqrt(d));
  return sides;
}

bool parallelepiped_reverse_check(const DomainMeasures& m, double lambda1, const BallConstants& c) {
  const InequalitySides s = parallelepiped_reverse_sides(m, lambda1, c);
  return s.lhs <= s.rhs * (1.0 + 1e-12);
}

std::vector<double> box_eigenvalues(const std::vector<double>& half_axes, int count) {
  const int d = static_cast<int>(half_axes.size());
  // Enumerate mode indices up to a bound large enough to contain the lowest `count`.
  const int max_mode = count + 1;
  std::vector<double> values;
  std::vector<int> mode(d, 1);
  while (true) {
    double s = 0.0;
    for (int i = 0; i < d; ++i) s += (mode[i] / half_axes[i]) * (mode[i] / half_axes[i]);
    values.push_back(kPi * kPi / 4.0 * s);
    int k = 0;
    while (k < d && ++mode[k] > max_mode) mode[k++] = 1;
    if (k == d) break;
  }
  std::sort(values.begin(), values.end());
  values.resize(std::min<std::size_t>(values.size(), count));
  return values;
}

std::optional<ExactSpectrum> exact_spectrum(const ShapeSpec& shape) {
  if (shape.kind() == ShapeKind::parallelepiped) {
    const auto values = box_eigenvalues(shape.half_axes(), 2);
    ExactSpectrum exact{values[0], values.size() > 1 ? values[1] : values[0], std::nullopt};
    if (shape.dimension() == 1) {
      const double a = shape.half_axes()[0];
      exact.torsion = 2.0 * a * a * a / 3.0;
    }
    return exact;
  }
  if (shape.kind() == ShapeKind::ball) {
    const BallConstants c = ball_constants(shape.dimension());
    const double r = shape.radius();
    return ExactSpectrum{c.lambda1_B1 / (r * r), c.lambda2_B1 / (r * r),
                         c.torsion_B1 * std::pow(r, shape.dimension() + 2)};
  }
  return std::nullopt;
}

double discrepancy(const BoundValue& bound, double reference) {
  if (bound.kind == BoundKind::lower) return (reference - bound.value) / reference;
  return (bound.value - reference) / bound.value;
}

}  // namespace spectral_bounds

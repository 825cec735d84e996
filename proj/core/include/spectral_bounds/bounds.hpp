#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spectral_bounds/geometry.hpp"
#include "spectral_bounds/special.hpp"

namespace spectral_bounds {

enum class BoundKind { upper, lower, upper_conjectured };
enum class BoundTarget { lambda1, lambda2, gap, torsion, isoperimetric_ratio };
/// Precondition under which a bound is rigorous.
enum class Requirement { any, convex, star_shaped, planar_simply_connected };

std::string_view to_string(BoundKind kind);
std::string_view to_string(BoundTarget target);
std::string_view to_string(Requirement requirement);

struct BoundValue {
  std::string name;
  BoundKind kind = BoundKind::upper;
  BoundTarget target = BoundTarget::lambda1;
  double value = 0.0;
  Requirement requirement = Requirement::any;
  std::string source;
  bool applicable = true;
};

/// Whether `requirement` holds for `shape` (all catalog shapes are star-shaped
/// and, in the plane, simply connected).
bool satisfies(const ShapeSpec& shape, Requirement requirement);

/// lambda1(B1) (|B1| / |Omega|)^{2/d}.
BoundValue faber_krahn(const DomainMeasures& m, const BallConstants& c);
/// lambda1(B1) F / (d |Omega|), star-shaped domains.
BoundValue upper_main(double F, const DomainMeasures& m, const BallConstants& c);
/// lambda1(B1) |dOmega| / (d rho |Omega|), convex domains.
BoundValue upper_corol(const DomainMeasures& m, const BallConstants& c);
/// lambda1(B_rho) = lambda1(B1) / rho^2 by domain monotonicity.
BoundValue inradius_ball_upper(const DomainMeasures& m, const BallConstants& c);
/// pi^2 / (4 rho^2), convex domains.
BoundValue protter_lower(double inradius);

// Planar bounds; throw InputError when d != 2.
BoundValue polya_upper(const DomainMeasures& m);
BoundValue pw_upper(const DomainMeasures& m);
BoundValue pw_explicit_upper(const DomainMeasures& m);
BoundValue afconj_upper(const DomainMeasures& m);

/// Parameters of the annulus matched in area and perimeter.
struct PwParameters {
  /// Isoperimetric deficit 1 - 4 pi |Omega| / |dOmega|^2.
  double deficit = 0.0;
  /// Inner-to-outer radius ratio, sqrt(deficit).
  double ratio = 0.0;
};
PwParameters pw_parameters(const DomainMeasures& m);

BoundValue lambda2_upper(const DomainMeasures& m, const BallConstants& c);
BoundValue gap_upper(const DomainMeasures& m, const BallConstants& c);
/// P >= d |Omega|^2 P(B1) / (|B1| F).
BoundValue torsion_lower(double F, const DomainMeasures& m, const BallConstants& c);

struct InequalitySides {
  double lhs = 0.0;
  double rhs = 0.0;
};

/// lhs = |dOmega| / |Omega|^{1-1/d};
/// rhs = (|dB| / |B|^{1-1/d}) sqrt(lambda1 / lambda1(B)) pi / (2 sqrt(lambda1(B1))), B the ball of volume |Omega|.
InequalitySides isoperimetric_growth_lhs_rhs(const DomainMeasures& m, double lambda1, const BallConstants& c);

/// Sides of the reverse inequality for parallelepipeds; holds when lhs <= rhs.
InequalitySides parallelepiped_reverse_sides(const DomainMeasures& m, double lambda1, const BallConstants& c);
bool parallelepiped_reverse_check(const DomainMeasures& m, double lambda1, const BallConstants& c);

/// Exact Dirichlet data available in closed form (boxes and balls).
struct ExactSpectrum {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  std::optional<double> torsion;
};
std::optional<ExactSpectrum> exact_spectrum(const ShapeSpec& shape);

/// Lowest `count` eigenvalues (pi^2/4) sum (m_i / a_i)^2 of a box, with multiplicity.
std::vector<double> box_eigenvalues(const std::vector<double>& half_axes, int count);

/// (bound - reference) / bound for upper bounds, (reference - bound) / reference for lower.
double discrepancy(const BoundValue& bound, double reference);

}  // namespace spectral_bounds

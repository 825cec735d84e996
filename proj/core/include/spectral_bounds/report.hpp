#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spectral_bounds/bounds.hpp"
#include "spectral_bounds/fmin.hpp"
#include "spectral_bounds/geometry.hpp"
#include "spectral_bounds/oracle.hpp"

namespace spectral_bounds {

struct ReportOptions {
  int resolution = 512;
  bool oracle = false;
  OracleOptions oracle_options;
};

struct Discrepancy {
  std::string bound;
  double value = 0.0;
};

/// Everything known about one domain: measures, F, every bound (inapplicable
/// ones flagged, value NaN), reference eigenvalues and discrepancies.
struct BoundReport {
  std::string shape_id;
  ShapeKind kind = ShapeKind::ball;
  DomainMeasures measures;
  double F = 0.0;
  Point minimizer;
  bool F_converged = false;
  std::optional<double> F_closed_form;
  std::vector<BoundValue> bounds;
  std::optional<SpectralEstimate> oracle;
  std::optional<double> lambda1_reference;
  std::optional<double> lambda2_reference;
  std::optional<double> torsion_reference;
  /// "exact", "oracle" or "none".
  std::string reference_source = "none";
  std::vector<Discrepancy> discrepancies;

  const BoundValue* find(std::string_view name) const;
  /// Value of an applicable bound; throws std::out_of_range otherwise.
  double value(std::string_view name) const;
  /// Every applicable lower bound on lambda1 <= every applicable rigorous upper bound.
  bool ordered() const;
};

/// Evaluates every bound for the given data; bounds whose precondition fails
/// are returned with applicable = false and value NaN.
std::vector<BoundValue> evaluate_bounds(const ShapeSpec& shape, const DomainMeasures& m, double F,
                                        const BallConstants& c);

/// F by Newton minimization on a boundary mesh (closed form for d > 3 balls).
FResult compute_F(const ShapeSpec& shape, int resolution);

/// Throws SolverError when the optional oracle fails.
BoundReport build_report(const ShapeSpec& shape, const ReportOptions& options = {});

}  // namespace spectral_bounds

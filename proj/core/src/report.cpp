#include "spectral_bounds/report.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "spectral_bounds/error.hpp"

namespace spectral_bounds {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

const BoundValue* BoundReport::find(std::string_view name) const {
  for (const auto& b : bounds) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

double BoundReport::value(std::string_view name) const {
  const BoundValue* b = find(name);
  if (b == nullptr || !b->applicable) throw std::out_of_range("no applicable bound named " + std::string(name));
  return b->value;
}

bool BoundReport::ordered() const {
  double lower = -std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();
  for (const auto& b : bounds) {
    if (!b.applicable || b.target != BoundTarget::lambda1) continue;
    if (b.kind == BoundKind::lower) lower = std::max(lower, b.value);
    if (b.kind == BoundKind::upper) upper = std::min(upper, b.value);
  }
  return lower <= upper * (1.0 + 1e-12);
}

std::vector<BoundValue> evaluate_bounds(const ShapeSpec& shape, const DomainMeasures& m, double F,
                                        const BallConstants& c) {
  std::vector<BoundValue> out;
  auto add = [&](BoundValue b) {
    b.applicable = satisfies(shape, b.requirement);
    if (!b.applicable) b.value = kNaN;
    out.push_back(std::move(b));
  };
  auto add_planar = [&](auto&& fn, const char* name, BoundKind kind) {
    if (m.dimension == 2) {
      add(fn(m));
    } else {
      out.push_back(BoundValue{name, kind, BoundTarget::lambda1, kNaN, Requirement::planar_simply_connected,
                               "two-dimensional only", false});
    }
  };

  add(faber_krahn(m, c));
  add(protter_lower(m.inradius));
  add(upper_main(F, m, c));
  add(upper_corol(m, c));
  add(inradius_ball_upper(m, c));
  add_planar([](const DomainMeasures& mm) { return polya_upper(mm); }, "polya", BoundKind::upper);
  add_planar([](const DomainMeasures& mm) { return pw_upper(mm); }, "pw", BoundKind::upper);
  add_planar([](const DomainMeasures& mm) { return pw_explicit_upper(mm); }, "pw_explicit", BoundKind::upper);
  add_planar([](const DomainMeasures& mm) { return afconj_upper(mm); }, "afconj", BoundKind::upper_conjectured);
  add(lambda2_upper(m, c));
  add(gap_upper(m, c));
  add(torsion_lower(F, m, c));
  return out;
}

FResult compute_F(const ShapeSpec& shape, int resolution) {
  if (shape.kind() == ShapeKind::ball && shape.dimension() > 3) {
    FResult exact;
    exact.value = *F_closed_form(shape);
    exact.minimizer = Point::Zero(shape.dimension());
    exact.converged = true;
    return exact;
  }
  const BoundaryMesh mesh = boundary_mesh(shape, resolution);
  return minimize_F(mesh, default_center(shape));
}

BoundReport build_report(const ShapeSpec& shape, const ReportOptions& options) {
  BoundReport report;
  report.shape_id = shape.label();
  report.kind = shape.kind();
  report.measures = measures(shape);

  const FResult f = compute_F(shape, options.resolution);
  report.F = f.value;
  report.minimizer = f.minimizer;
  report.F_converged = f.converged;
  report.F_closed_form = F_closed_form(shape);

  const BallConstants c = ball_constants(shape.dimension());
  report.bounds = evaluate_bounds(shape, report.measures, report.F, c);

  if (const auto exact = exact_spectrum(shape)) {
    report.lambda1_reference = exact->lambda1;
    report.lambda2_reference = exact->lambda2;
    report.torsion_reference = exact->torsion;
    report.reference_source = "exact";
  }
  if (options.oracle && shape.dimension() <= 3) {
    OracleOptions oracle_options = options.oracle_options;
    oracle_options.torsion = true;
    report.oracle = estimate_spectrum(shape, oracle_options);
    if (report.reference_source == "none") {
      report.lambda1_reference = report.oracle->lambda1;
      report.lambda2_reference = report.oracle->lambda2;
      report.torsion_reference = report.oracle->torsion;
      report.reference_source = "oracle";
    } else if (!report.torsion_reference) {
      report.torsion_reference = report.oracle->torsion;
    }
  }

  for (const auto& b : report.bounds) {
    if (!b.applicable) continue;
    std::optional<double> reference;
    switch (b.target) {
      case BoundTarget::lambda1: reference = report.lambda1_reference; break;
      case BoundTarget::lambda2: reference = report.lambda2_reference; break;
      case BoundTarget::gap:
        if (report.lambda1_reference && report.lambda2_reference) {
          reference = *report.lambda2_reference - *report.lambda1_reference;
        }
        break;
      case BoundTarget::torsion: reference = report.torsion_reference; break;
      case BoundTarget::isoperimetric_ratio: break;
    }
    if (reference) report.discrepancies.push_back(Discrepancy{b.name, discrepancy(b, *reference)});
  }
  return report;
}

}  // namespace spectral_bounds

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spectral_bounds/report.hpp"

namespace spectral_bounds {

/// start:stop:step, inclusive of stop up to rounding.
struct RangeSpec {
  double start = 0.0;
  double stop = 0.0;
  double step = 0.0;

  std::vector<double> values() const;
};

RangeSpec parse_range(std::string_view text);

/// One-parameter families:
///   parallelepiped / ellipsoid: half-axes (c, 1), c = a1/a2
///   stadium / swiss_cross:      a = 1, b = c
ShapeSpec family_member(ShapeKind kind, double c);

struct SweepRow {
  double c = 0.0;
  std::vector<BoundValue> bounds;
  std::optional<double> lambda1_reference;
  std::string reference_source = "none";
  std::vector<Discrepancy> discrepancies;
  /// Smallest applicable upper bound on lambda1 (conjectured ones included).
  std::string winner;
  /// Another bound matched the winner to 1e-12 relative; the name that sorts first won.
  bool tie = false;

  double value(std::string_view name) const;
};

struct SweepOptions {
  int resolution = 512;
  bool oracle = false;
  OracleOptions oracle_options;
  int jobs = 1;
};

/// Rows come back in parameter order whatever the completion order.
std::vector<SweepRow> run_sweep(ShapeKind kind, std::span<const double> parameters, const SweepOptions& options = {});

std::string sweep_to_csv(const std::vector<SweepRow>& rows);

}  // namespace spectral_bounds

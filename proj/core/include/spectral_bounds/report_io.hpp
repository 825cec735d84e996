#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spectral_bounds/geometry.hpp"
#include "spectral_bounds/report.hpp"

namespace spectral_bounds {

/// Parses the JSON shape descriptor
///   {"kind": "...", "dimension": d, "params": {...}}
/// with params {"half_axes": [...]}, {"a": .., "b": ..}, {"radius": r} or
/// {"halfspaces": [{"normal": [...], "offset": c}, ...]}. Throws InputError.
ShapeSpec parse_shape_json(std::string_view text);
std::string shape_to_json(const ShapeSpec& shape);

/// Inline form used by the CLI: --shape kind --params p1,p2,... --dim d.
/// dimension <= 0 means "infer" (number of params for boxes/ellipsoids, 2 for balls).
ShapeSpec shape_from_params(std::string_view kind, std::span<const double> params, int dimension);

/// Comma-separated doubles; throws InputError on malformed input.
std::vector<double> parse_number_list(std::string_view text);

/// Stable key order and shortest round-trip floats, so equal reports give byte-identical output.
std::string report_to_json(const BoundReport& report);
/// Header "name,kind,target,value,applicable,discrepancy", one row per bound.
std::string report_to_csv(const BoundReport& report);
std::string report_to_table(const BoundReport& report);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Column index by header name; throws InputError if absent.
  std::size_t column(std::string_view name) const;
};

/// Minimal reader for the CSV this library writes (no quoting).
CsvTable parse_csv(std::string_view text);

}  // namespace spectral_bounds

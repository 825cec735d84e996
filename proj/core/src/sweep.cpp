#include "spectral_bounds/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "spectral_bounds/error.hpp"
#include "spectral_bounds/format.hpp"

namespace spectral_bounds {

namespace {

double parse_double(std::string_view token) {
  double value = 0.0;
  const auto res = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || res.ec != std::errc() || res.ptr != token.data() + token.size()) {
    throw InputError("malformed number '" + std::string(token) + "' in range");
  }
  return value;
}

SweepRow make_row(ShapeKind kind, double c, const SweepOptions& options) {
  ReportOptions report_options;
  report_options.resolution = options.resolution;
  report_options.oracle = options.oracle;
  report_options.oracle_options = options.oracle_options;
  const BoundReport report = build_report(family_member(kind, c), report_options);

  SweepRow row;
  row.c = c;
  row.bounds = report.bounds;
  row.lambda1_reference = report.lambda1_reference;
  row.reference_source = report.reference_source;
  row.discrepancies = report.discrepancies;

  double best = std::numeric_limits<double>::infinity();
  for (const auto& b : row.bounds) {
    if (!b.applicable || b.target != BoundTarget::lambda1 || b.kind == BoundKind::lower) continue;
    best = std::min(best, b.value);
  }
  std::vector<std::string> tied;
  for (const auto& b : row.bounds) {
    if (!b.applicable || b.target != BoundTarget::lambda1 || b.kind == BoundKind::lower) continue;
    if (b.value <= best * (1.0 + 1e-12)) tied.push_back(b.name);
  }
  std::sort(tied.begin(), tied.end());
  if (!tied.empty()) row.winner = tied.front();
  row.tie = tied.size() > 1;
  return row;
}

}  // namespace

std::vector<double> RangeSpec::values() const {
  std::vector<double> out;
  const double count = std::floor((stop - start) / step + 1e-9);
  for (long i = 0; i <= static_cast<long>(count); ++i) out.push_back(start + static_cast<double>(i) * step);
  return out;
}

RangeSpec parse_range(std::string_view text) {
  const std::size_t first = text.find(':');
  const std::size_t second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (first == std::string_view::npos || second == std::string_view::npos) {
    throw InputError("range must look like start:stop:step");
  }
  RangeSpec r{parse_double(text.substr(0, first)), parse_double(text.substr(first + 1, second - first - 1)),
              parse_double(text.substr(second + 1))};
  if (!(r.step > 0.0)) throw InputError("range step must be positive");
  if (!(r.stop >= r.start)) throw InputError("range stop must not precede start");
  if ((r.stop - r.start) / r.step > 1e6) throw InputError("range has too many points");
  return r;
}

ShapeSpec family_member(ShapeKind kind, double c) {
  switch (kind) {
    case ShapeKind::parallelepiped: return ShapeSpec::parallelepiped({c, 1.0});
    case ShapeKind::ellipsoid: return ShapeSpec::ellipsoid({c, 1.0});
    case ShapeKind::stadium: return ShapeSpec::stadium(1.0, c);
    case ShapeKind::swiss_cross: return ShapeSpec::swiss_cross(1.0, c);
    case ShapeKind::ball:
    case ShapeKind::polytope: break;
  }
  throw InputError("sweeps are defined for parallelepiped, ellipsoid, stadium and swiss_cross");
}

double SweepRow::value(std::string_view name) const {
  for (const auto& b : bounds) {
    if (b.name == name && b.applicable) return b.value;
  }
  throw std::out_of_range("no applicable bound named " + std::string(name));
}

std::vector<SweepRow> run_sweep(ShapeKind kind, std::span<const double> parameters, const SweepOptions& options) {
  std::vector<SweepRow> rows(parameters.size());
  const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(parameters.size())));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < parameters.size(); i = next++) {
      try {
        rows[i] = make_row(kind, parameters[i], options);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << 'c';
  if (rows.empty()) {
    os << '\n';
    return os.str();
  }
  const auto& names = rows.front().bounds;
  for (const auto& b : names) os << ',' << b.name;
  os << ",lambda1_reference,reference_source";
  for (const auto& b : names) os << ",disc_" << b.name;
  os << ",winner,tie\n";
  for (const auto& row : rows) {
    os << format_double(row.c);
    for (const auto& b : row.bounds) os << ',' << (b.applicable ? format_double(b.value) : std::string());
    os << ',' << (row.lambda1_reference ? format_double(*row.lambda1_reference) : std::string()) << ','
       << row.reference_source;
    for (const auto& b : row.bounds) {
      os << ',';
      for (const auto& d : row.discrepancies) {
        if (d.bound == b.name) os << format_double(d.value);
      }
    }
    os << ',' << row.winner << ',' << (row.tie ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace spectral_bounds

#include "spectral_bounds/report_io.hpp"

#include <charconv>
#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "spectral_bounds/error.hpp"
#include "spectral_bounds/format.hpp"

namespace spectral_bounds {

namespace {

using ordered_json = nlohmann::ordered_json;

double json_number(const ordered_json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    throw InputError(std::string("shape descriptor: missing numeric field '") + key + "'");
  }
  return j.at(key).get<double>();
}

std::vector<double> json_numbers(const ordered_json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw InputError(std::string("shape descriptor: missing array field '") + key + "'");
  }
  std::vector<double> out;
  for (const auto& v : j.at(key)) {
    if (!v.is_number()) throw InputError(std::string("shape descriptor: non-numeric entry in '") + key + "'");
    out.push_back(v.get<double>());
  }
  return out;
}

ordered_json number_or_null(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); }

template <class T>
ordered_json optional_number(const std::optional<T>& v) {
  return v ? number_or_null(*v) : ordered_json(nullptr);
}

ordered_json point_json(const Point& p) {
  ordered_json arr = ordered_json::array();
  for (Eigen::Index i = 0; i < p.size(); ++i) arr.push_back(p(i));
  return arr;
}

std::string csv_number(double v) { return std::isfinite(v) ? format_double(v) : std::string(); }

}  // namespace

ShapeSpec parse_shape_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("shape descriptor is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw InputError("shape descriptor needs a string field 'kind'");
  }
  const ShapeKind kind = parse_shape_kind(j.at("kind").get<std::string>());
  int dimension = 0;
  if (j.contains("dimension")) {
    if (!j.at("dimension").is_number_integer()) throw InputError("shape descriptor: 'dimension' must be an integer");
    dimension = j.at("dimension").get<int>();
  }
  const ordered_json params = j.contains("params") ? j.at("params") : ordered_json::object();

  ShapeSpec shape = [&] {
    switch (kind) {
      case ShapeKind::parallelepiped: return ShapeSpec::parallelepiped(json_numbers(params, "half_axes"));
      case ShapeKind::ellipsoid: return ShapeSpec::ellipsoid(json_numbers(params, "half_axes"));
      case ShapeKind::stadium: return ShapeSpec::stadium(json_number(params, "a"), json_number(params, "b"));
      case ShapeKind::swiss_cross:
        return ShapeSpec::swiss_cross(json_number(params, "a"), json_number(params, "b"));
      case ShapeKind::ball: return ShapeSpec::ball(json_number(params, "radius"), dimension > 0 ? dimension : 2);
      case ShapeKind::polytope: {
        const ordered_json& list = params.contains("halfspaces") ? params.at("halfspaces")
                                   : j.contains("halfspaces")    ? j.at("halfspaces")
                                                                 : throw InputError("polytope needs 'halfspaces'");
        if (!list.is_array()) throw InputError("'halfspaces' must be an array");
        std::vector<HalfSpace> halfspaces;
        for (const auto& h : list) {
          const auto normal = json_numbers(h, "normal");
          HalfSpace hs;
          hs.normal = Eigen::Map<const Eigen::VectorXd>(normal.data(), static_cast<Eigen::Index>(normal.size()));
          hs.offset = json_number(h, "offset");
          halfspaces.push_back(std::move(hs));
        }
        return ShapeSpec::polytope(std::move(halfspaces));
      }
    }
    throw InputError("unsupported shape kind");
  }();
  if (dimension > 0 && dimension != shape.dimension()) {
    throw InputError("shape descriptor: 'dimension' does not match the parameters");
  }
  return shape;
}

std::string shape_to_json(const ShapeSpec& shape) {
  ordered_json j;
  j["kind"] = std::string(to_string(shape.kind()));
  j["dimension"] = shape.dimension();
  ordered_json params = ordered_json::object();
  switch (shape.kind()) {
    case ShapeKind::parallelepiped:
    case ShapeKind::ellipsoid: params["half_axes"] = shape.half_axes(); break;
    case ShapeKind::stadium:
    case ShapeKind::swiss_cross:
      params["a"] = shape.a();
      params["b"] = shape.b();
      break;
    case ShapeKind::ball: params["radius"] = shape.radius(); break;
    case ShapeKind::polytope: {
      ordered_json list = ordered_json::array();
      for (const auto& h : shape.halfspaces()) {
        list.push_back(ordered_json{{"normal", point_json(h.normal)}, {"offset", h.offset}});
      }
      params["halfspaces"] = std::move(list);
      break;
    }
  }
  j["params"] = std::move(params);
  return j.dump();
}

std::vector<double> parse_number_list(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    std::string_view token = text.substr(start, end - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    double value = 0.0;
    const auto res = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || res.ec != std::errc() || res.ptr != token.data() + token.size()) {
      throw InputError("malformed number '" + std::string(token) + "'");
    }
    out.push_back(value);
    start = end + 1;
  }
  return out;
}

ShapeSpec shape_from_params(std::string_view kind_name, std::span<const double> params, int dimension) {
  const ShapeKind kind = parse_shape_kind(kind_name);
  std::vector<double> values(params.begin(), params.end());
  auto need = [&](std::size_t n) {
    if (values.size() != n) {
      throw InputError(std::string(to_string(kind)) + " expects " + std::to_string(n) + " parameter(s)");
    }
  };
  switch (kind) {
    case ShapeKind::parallelepiped:
    case ShapeKind::ellipsoid: {
      if (values.empty()) throw InputError("missing half-axis lengths");
      if (values.size() == 1 && dimension > 1) values.assign(dimension, values.front());
      if (dimension > 0 && static_cast<int>(values.size()) != dimension) {
        throw InputError("number of half-axes does not match --dim");
      }
      return kind == ShapeKind::parallelepiped ? ShapeSpec::parallelepiped(values) : ShapeSpec::ellipsoid(values);
    }
    case ShapeKind::stadium:
    case ShapeKind::swiss_cross:
      need(2);
      if (dimension > 0 && dimension != 2) throw InputError("stadium and swiss cross are two-dimensional");
      return kind == ShapeKind::stadium ? ShapeSpec::stadium(values[0], values[1])
                                        : ShapeSpec::swiss_cross(values[0], values[1]);
    case ShapeKind::ball:
      need(1);
      return ShapeSpec::ball(values[0], dimension > 0 ? dimension : 2);
    case ShapeKind::polytope: throw InputError("polytopes must be given as a JSON shape file");
  }
  throw InputError("unsupported shape kind");
}

std::string report_to_json(const BoundReport& report) {
  ordered_json j;
  j["shape"] = report.shape_id;
  j["kind"] = std::string(to_string(report.kind));
  j["dimension"] = report.measures.dimension;
  j["measures"] = ordered_json{{"volume", report.measures.volume},
                               {"surface", report.measures.surface},
                               {"inradius", report.measures.inradius}};
  j["F"] = ordered_json{{"value", report.F},
                        {"minimizer", point_json(report.minimizer)},
                        {"converged", report.F_converged},
                        {"closed_form", optional_number(report.F_closed_form)}};
  j["reference"] = ordered_json{{"source", report.reference_source},
                                {"lambda1", optional_number(report.lambda1_reference)},
                                {"lambda2", optional_number(report.lambda2_reference)},
                                {"torsion", optional_number(report.torsion_reference)}};
  if (report.oracle) {
    const auto& o = *report.oracle;
    j["oracle"] = ordered_json{{"lambda1", o.lambda1},
                               {"lambda2", o.lambda2},
                               {"torsion", optional_number(o.torsion)},
                               {"spacing", o.spacing},
                               {"extrapolated", o.extrapolated},
                               {"error_estimate", o.error_estimate}};
  } else {
    j["oracle"] = nullptr;
  }
  ordered_json bounds = ordered_json::array();
  for (const auto& b : report.bounds) {
    ordered_json entry;
    entry["name"] = b.name;
    entry["kind"] = std::string(to_string(b.kind));
    entry["target"] = std::string(to_string(b.target));
    entry["value"] = number_or_null(b.value);
    entry["applicable"] = b.applicable;
    entry["requires"] = std::string(to_string(b.requirement));
    entry["source"] = b.source;
    entry["discrepancy"] = nullptr;
    for (const auto& d : report.discrepancies) {
      if (d.bound == b.name) entry["discrepancy"] = number_or_null(d.value);
    }
    bounds.push_back(std::move(entry));
  }
  j["bounds"] = std::move(bounds);
  return j.dump(2) + "\n";
}

std::string report_to_csv(const BoundReport& report) {
  std::ostringstream os;
  os << "name,kind,target,value,applicable,discrepancy\n";
  for (const auto& b : report.bounds) {
    std::string disc;
    for (const auto& d : report.discrepancies) {
      if (d.bound == b.name) disc = csv_number(d.value);
    }
    os << b.name << ',' << to_string(b.kind) << ',' << to_string(b.target) << ',' << csv_number(b.value) << ','
       << (b.applicable ? "true" : "false") << ',' << disc << '\n';
  }
  return os.str();
}

std::string report_to_table(const BoundReport& report) {
  std::ostringstream os;
  os << "shape      " << report.shape_id << '\n';
  os << "volume     " << format_double(report.measures.volume) << '\n';
  os << "surface    " << format_double(report.measures.surface) << '\n';
  os << "inradius   " << format_double(report.measures.inradius) << '\n';
  os << "F          " << format_double(report.F);
  if (report.F_closed_form) os << "  (closed form " << format_double(*report.F_closed_form) << ')';
  os << '\n';
  if (report.lambda1_reference) {
    os << "lambda1    " << format_double(*report.lambda1_reference) << "  [" << report.reference_source << "]\n";
  }
  if (report.lambda2_reference) {
    os << "lambda2    " << format_double(*report.lambda2_reference) << "  [" << report.reference_source << "]\n";
  }
  if (report.torsion_reference) os << "torsion    " << format_double(*report.torsion_reference) << '\n';
  if (report.oracle) os << "oracle err " << format_double(report.oracle->error_estimate) << '\n';
  os << '\n';
  os << std::left << std::setw(15) << "bound" << std::setw(19) << "kind" << std::setw(9) << "target"
     << std::setw(24) << "value" << "discrepancy\n";
  for (const auto& b : report.bounds) {
    std::string disc = "-";
    for (const auto& d : report.discrepancies) {
      if (d.bound == b.name) disc = format_double(d.value);
    }
    os << std::left << std::setw(15) << b.name << std::setw(19) << to_string(b.kind) << std::setw(9)
       << to_string(b.target) << std::setw(24)
       << (b.applicable ? format_double(b.value) : "n/a (" + std::string(to_string(b.requirement)) + ")") << disc
       << '\n';
  }
  return os.str();
}

std::size_t CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw InputError("CSV has no column '" + std::string(name) + "'");
}

CsvTable parse_csv(std::string_view text) {
  CsvTable table;
  auto split = [](std::string_view line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
      const std::size_t end = line.find(',', start);
      cells.emplace_back(line.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
      if (end == std::string_view::npos) break;
      start = end + 1;
    }
    return cells;
  };
  std::size_t pos = 0;
  bool first = true;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos = end + 1;
    if (line.empty()) continue;
    if (first) {
      table.header = split(line);
      first = false;
    } else {
      table.rows.push_back(split(line));
      if (table.rows.back().size() != table.header.size()) throw InputError("CSV row has wrong number of fields");
    }
  }
  if (first) throw InputError("CSV is empty");
  return table;
}

}  // namespace spectral_bounds

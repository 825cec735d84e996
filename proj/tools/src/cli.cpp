#include "spectral_bounds/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "spectral_bounds/error.hpp"
#include "spectral_bounds/report.hpp"
#include "spectral_bounds/report_io.hpp"
#include "spectral_bounds/sweep.hpp"
#include "spectral_bounds/verification.hpp"

namespace spectral_bounds::cli {

namespace {

struct Common {
  std::string oracle = "off";
  std::string oracle_h = "1/128";
  int resolution = 512;
  std::string out_path;
  std::string format;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

double parse_double(std::string_view text) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) throw InputError("not a number: " + std::string(text));
  return v;
}

std::string render(const BoundReport& report, const std::string& format) {
  if (format == "json") return report_to_json(report) + "\n";
  if (format == "csv") return report_to_csv(report);
  return report_to_table(report);
}

void add_common(CLI::App* cmd, Common& c, bool with_format) {
  cmd->add_option("--oracle", c.oracle, "Run the finite-difference oracle")->check(CLI::IsMember({"on", "off"}));
  cmd->add_option("--oracle-h", c.oracle_h, "Coarse oracle spacing per unit of the narrowest width, e.g. 1/128");
  cmd->add_option("--resolution", c.resolution, "Boundary mesh resolution for curved shapes")
      ->check(CLI::Range(4, 1 << 20));
  cmd->add_option("--out", c.out_path, "Also write the output to this file");
  if (with_format) {
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
  }
}

int compute(const std::string& shape_file, const std::string& kind, const std::string& params, int dim,
            const Common& c, std::ostream& out) {
  if (shape_file.empty() == kind.empty()) throw InputError("give either a shape file or --shape");
  const ShapeSpec shape = shape_file.empty() ? shape_from_params(kind, parse_number_list(params), dim)
                                             : parse_shape_json(read_file(shape_file));
  ReportOptions ro;
  ro.resolution = c.resolution;
  ro.oracle = c.oracle == "on";
  ro.oracle_options.nodes = oracle_nodes_from_spacing(c.oracle_h);
  const BoundReport report = build_report(shape, ro);

  out << render(report, c.format.empty() ? "table" : c.format);
  if (!c.out_path.empty()) {
    std::string fmt = c.format.empty() ? "json" : c.format;
    if (ends_with(c.out_path, ".json")) fmt = "json";
    if (ends_with(c.out_path, ".csv")) fmt = "csv";
    write_file(c.out_path, render(report, fmt));
  }
  return ok;
}

int sweep(const std::string& kind, const std::string& range, int jobs, const Common& c, std::ostream& out) {
  if (!c.format.empty() && c.format != "csv") throw InputError("sweep writes csv only");
  SweepOptions so;
  so.resolution = c.resolution;
  so.oracle = c.oracle == "on";
  so.oracle_options.nodes = oracle_nodes_from_spacing(c.oracle_h);
  so.jobs = jobs;
  const std::vector<double> values = parse_range(range).values();
  const std::string csv = sweep_to_csv(run_sweep(parse_shape_kind(kind), values, so));
  out << csv;
  if (!c.out_path.empty()) write_file(c.out_path, csv);
  return ok;
}

int verify(const std::vector<std::string>& only, const Common& c, std::ostream& out, std::ostream& err) {
  VerifyOptions vo;
  vo.oracle_nodes = oracle_nodes_from_spacing(c.oracle_h);
  vo.resolution = c.resolution;
  for (const std::string& item : only) {
    std::stringstream s(item);
    std::string id;
    while (std::getline(s, id, ',')) {
      if (!id.empty()) vo.only.push_back(id);
    }
  }
  const std::vector<CheckResult> results = run_verification(vo);
  for (const CheckResult& r : results) {
    err << (r.passed ? "PASS " : "FAIL ") << r.number << " " << r.id << ": " << r.detail << "\n";
  }
  const std::string json = verification_to_json(results);
  out << json << "\n";
  if (!c.out_path.empty()) write_file(c.out_path, json + "\n");
  const bool all = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
  return all ? ok : verify_failed;
}

}  // namespace

int oracle_nodes_from_spacing(const std::string& text) {
  double h = 0.0;
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    h = parse_double(text);
  } else {
    const double num = parse_double(std::string_view(text).substr(0, slash));
    const double den = parse_double(std::string_view(text).substr(slash + 1));
    if (den == 0.0) throw InputError("oracle spacing has a zero denominator");
    h = num / den;
  }
  if (!(h > 0.0) || h > 0.25) throw InputError("oracle spacing must lie in (0, 1/4]");
  return static_cast<int>(std::lround(1.0 / h));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Upper and lower bounds for the first Dirichlet eigenvalue of star-shaped domains"};
  app.name("spectral-bounds");
  app.require_subcommand(1);

  Common common;
  std::string shape_file, kind, params, range;
  int dim = 0;
  int jobs = 1;
  std::vector<std::string> only;

  CLI::App* compute_cmd = app.add_subcommand("compute", "Bound report for one shape");
  compute_cmd->add_option("shape-file", shape_file, "JSON shape descriptor");
  compute_cmd->add_option("--shape", kind, "Shape kind (rect, ellipse, stadium, cross, ball, polygon, ...)");
  compute_cmd->add_option("--params", params, "Comma-separated shape parameters");
  compute_cmd->add_option("--dim", dim, "Dimension (balls and ellipsoids)");
  add_common(compute_cmd, common, true);

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Bounds across a one-parameter family, as CSV");
  sweep_cmd->add_option("--shape", kind, "Family: rect, ellipse, stadium or cross")->required();
  sweep_cmd->add_option("--range", range, "start:stop:step")->required();
  sweep_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));
  add_common(sweep_cmd, common, true);

  CLI::App* verify_cmd = app.add_subcommand("verify", "Run the acceptance checks");
  verify_cmd->add_option("--only", only, "Check ids, comma separated");
  verify_cmd->add_option("--oracle-h", common.oracle_h, "Coarse oracle spacing, e.g. 1/64");
  verify_cmd->add_option("--resolution", common.resolution, "Boundary mesh resolution")->check(CLI::Range(4, 1 << 20));
  verify_cmd->add_option("--out", common.out_path, "Also write the JSON summary to this file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }

  try {
    if (compute_cmd->parsed()) return compute(shape_file, kind, params, dim, common, out);
    if (sweep_cmd->parsed()) return sweep(kind, range, jobs, common, out);
    return verify(only, common, out, err);
  } catch (const SolverError& e) {
    err << "error: " << e.what() << "\n";
    return solver_error;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return solver_error;
  }
}

}  // namespace spectral_bounds::cli

// mgpoints: Hilbert functions of finite point sets in products of projective
// lines, and the line-multiplicity profiles they encode.
//
// Exit codes: 0 success, 1 a verification check failed, 2 input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mgp/examples.hpp"
#include "mgp/hilbert.hpp"
#include "mgp/lines.hpp"
#include "mgp/points.hpp"
#include "mgp/random_points.hpp"
#include "mgp/render.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

struct InputSelection {
  std::string path;
  std::string example;
  std::string format = "auto";  // auto|plain|json
};

void add_input_options(CLI::App& cmd, InputSelection& sel) {
  auto* file = cmd.add_option("input", sel.path, "point file ('-' for stdin)");
  auto* ex = cmd.add_option("--example", sel.example, "builtin example id (3.3 or 3.5)");
  cmd.add_option("--input-format", sel.format, "input format: auto, plain or json")
      ->check(CLI::IsMember({"auto", "plain", "json"}));
  file->excludes(ex);
}

mgp::PointSet load_points(const InputSelection& sel) {
  if (!sel.example.empty()) {
    return mgp::builtin_example(sel.example);
  }
  if (sel.path.empty()) {
    throw std::invalid_argument("no input: give a point file or --example");
  }
  mgp::PointFormat format = mgp::PointFormat::kPlain;
  if (sel.format == "json" ||
      (sel.format == "auto" && sel.path.size() > 5 &&
       sel.path.substr(sel.path.size() - 5) == ".json")) {
    format = mgp::PointFormat::kJson;
  }
  if (sel.path == "-") {
    return mgp::parse_point_set(std::cin, format);
  }
  std::ifstream in(sel.path);
  if (!in) {
    throw std::invalid_argument("cannot open '" + sel.path + "'");
  }
  return mgp::parse_point_set(in, format);
}

std::optional<mgp::MultiDegree> parse_box(const std::string& text, std::size_t arity) {
  if (text.empty()) {
    return std::nullopt;
  }
  mgp::MultiDegree d{{}};
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                      : comma - start);
    try {
      std::size_t pos = 0;
      const int v = std::stoi(piece, &pos);
      if (pos != piece.size() || v < 0) {
        throw std::invalid_argument(piece);
      }
      d.parts.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad box component '" + piece + "'");
    }
    if (comma == std::string::npos) {
      break;
    }
    start = comma + 1;
  }
  if (d.arity() != arity) {
    throw std::invalid_argument("box has " + std::to_string(d.arity()) +
                                " components, expected " + std::to_string(arity));
  }
  return d;
}

int cmd_hf(const InputSelection& sel, const std::string& box_text, const std::string& format) {
  const mgp::PointSet x = load_points(sel);
  mgp::MultiDegree upper = mgp::stabilization_corner(x);
  for (int& p : upper.parts) {
    p += 1;  // default box: one step past the corner, showing the constant fringe
  }
  if (auto box = parse_box(box_text, x.arity())) {
    upper = *box;
  }
  const mgp::HilbertTable table = mgp::hilbert_table(x, mgp::DegreeBox{upper});
  if (format == "json") {
    std::cout << mgp::table_to_json(table).dump(2) << "\n";
  } else {
    std::cout << mgp::render_layers(table);
  }
  return kExitOk;
}

int cmd_lines(const InputSelection& sel, int axis, bool all_axes, bool as_json) {
  const mgp::PointSet x = load_points(sel);
  std::vector<std::size_t> axes;
  if (all_axes || axis < 0) {
    for (std::size_t a = 0; a < x.arity(); ++a) {
      axes.push_back(a);
    }
  } else {
    if (static_cast<std::size_t>(axis) >= x.arity()) {
      throw std::invalid_argument("axis " + std::to_string(axis) + " out of range for arity " +
                                  std::to_string(x.arity()));
    }
    axes.push_back(static_cast<std::size_t>(axis));
  }
  bool agree = true;
  nlohmann::json json_axes = nlohmann::json::array();
  for (std::size_t a : axes) {
    const mgp::AxisReport report = mgp::axis_report(x, a);
    agree = agree && report.ok();
    if (as_json) {
      json_axes.push_back(mgp::axis_report_to_json(report));
    } else {
      std::cout << mgp::render_axis_report(report);
    }
  }
  if (as_json) {
    std::cout << nlohmann::json{{"points", x.size()}, {"agree", agree}, {"axes", json_axes}}
                     .dump(2)
              << "\n";
  }
  return agree ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const InputSelection& sel, bool as_json) {
  const mgp::PointSet x = load_points(sel);
  const std::vector<mgp::CheckResult> checks = mgp::run_check_suite(x);
  if (as_json) {
    std::cout << mgp::checks_to_json(checks).dump(2) << "\n";
  } else {
    std::cout << mgp::render_checks(checks);
  }
  return mgp::all_ok(checks) ? kExitOk : kExitCheckFailed;
}

int cmd_random(const mgp::RandomConfig& config) {
  const mgp::PointSet x = mgp::random_point_set(config);
  std::cout << mgp::to_plain_text(x);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert functions of point sets in products of projective lines"};
  app.require_subcommand(1);

  InputSelection hf_sel;
  std::string hf_box;
  std::string hf_format = "layers";
  auto* hf = app.add_subcommand("hf", "print the Hilbert function over a degree box");
  add_input_options(*hf, hf_sel);
  hf->add_option("--box", hf_box, "box upper corner, e.g. 3,3,2 (default: corner+1)");
  hf->add_option("--format", hf_format, "output format: layers or json")
      ->check(CLI::IsMember({"layers", "json"}));

  InputSelection lines_sel;
  int lines_axis = -1;
  bool lines_all = false;
  bool lines_json = false;
  auto* lines = app.add_subcommand("lines", "count points per line from the Hilbert function");
  add_input_options(*lines, lines_sel);
  auto* axis_opt = lines->add_option("--axis", lines_axis, "free axis (default: all axes)");
  lines->add_flag("--all-axes", lines_all, "report every axis")->excludes(axis_opt);
  lines->add_flag("--json", lines_json, "machine-readable output");

  InputSelection verify_sel;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "run the full invariant suite on the input");
  add_input_options(*verify, verify_sel);
  verify->add_flag("--json", verify_json, "machine-readable report");

  mgp::RandomConfig random_config;
  auto* random = app.add_subcommand("random", "emit a random distinct point configuration");
  random->add_option("--arity", random_config.arity, "number of projective-line factors")
      ->default_val(3);
  random->add_option("--count", random_config.count, "number of points")->required();
  random->add_option("--pool", random_config.pool, "coordinate pool size")->required();
  random->add_option("--seed", random_config.seed, "RNG seed")->default_val(0);
  random->add_flag("--allow-infinity", random_config.allow_infinity,
                   "include [0:1] in the coordinate pool");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (hf->parsed()) {
      return cmd_hf(hf_sel, hf_box, hf_format);
    }
    if (lines->parsed()) {
      return cmd_lines(lines_sel, lines_axis, lines_all, lines_json);
    }
    if (verify->parsed()) {
      return cmd_verify(verify_sel, verify_json);
    }
    if (random->parsed()) {
      return cmd_random(random_config);
    }
  } catch (const mgp::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitInputError;
}

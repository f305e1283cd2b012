// Command-line front end: single-component analysis, case-file analysis,
// parameter sweeps, and the verification suite.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "gridgeo/lcr.hpp"
#include "gridgeo/lr.hpp"
#include "gridgeo/network.hpp"
#include "gridgeo/types.hpp"
#include "gridgeo/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNumerical = 2;
constexpr double kPi = 3.141592653589793;

double parse_omega(const std::string& text) {
  if (text == "pi") return kPi;
  if (text == "2pi50") return 2.0 * kPi * 50.0;
  size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw gridgeo::ParseError("--omega: cannot parse '" + text + "'");
  }
  if (pos != text.size() || !(value > 0.0))
    throw gridgeo::ParseError("--omega: expected 'pi', '2pi50' or a positive "
                              "decimal, got '" + text + "'");
  return value;
}

// Range syntax start:stop:count with inclusive endpoints.
gridgeo::lcr::GridSpec parse_range(const std::string& flag,
                                   const std::string& text) {
  gridgeo::lcr::GridSpec spec;
  std::istringstream is(text);
  char c1 = 0, c2 = 0;
  if (!(is >> spec.start >> c1 >> spec.stop >> c2 >> spec.count) ||
      c1 != ':' || c2 != ':' || !is.eof() || spec.count < 1)
    throw gridgeo::ParseError(flag + ": expected start:stop:count, got '" +
                              text + "'");
  return spec;
}

void emit(const std::string& output_path, const std::string& text) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(output_path, std::ios::binary);
  if (!os) throw gridgeo::ParseError("--output: cannot open " + output_path);
  os << text;
}

int run(int argc, char** argv) {
  CLI::App app{"Intrinsic-geometric reliability and voltage-stability "
               "analysis of transmission-line components"};
  app.require_subcommand(1);

  std::string omega_text = "pi";
  std::string output_path;
  std::string format = "text";

  auto* line_cmd = app.add_subcommand(
      "analyze-line", "Classify a single LR or RLC component");
  double arg_r = 0.0, arg_l = 0.0;
  std::optional<double> arg_c;
  line_cmd->add_option("--r", arg_r, "resistance [pu]")->required();
  line_cmd->add_option("--l", arg_l, "inductance [pu]")->required();
  line_cmd->add_option("--c", arg_c, "capacitance [pu]; omit for LR analysis");
  line_cmd->add_option("--omega", omega_text, "pi, 2pi50 or a decimal");
  line_cmd->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  line_cmd->add_option("--output", output_path, "output path (default stdout)");

  auto* net_cmd =
      app.add_subcommand("analyze-network", "Analyze a JSON case file");
  std::string case_path;
  std::optional<std::string> net_omega;
  net_cmd->add_option("--case", case_path, "case file path")->required();
  net_cmd->add_option("--omega", net_omega, "override the file's omega");
  net_cmd->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  net_cmd->add_option("--output", output_path, "output path (default stdout)");

  auto* sweep_cmd = app.add_subcommand(
      "sweep", "Grid sweep over (L, C) at fixed r; CSV output");
  std::string l_range_text, c_range_text;
  double sweep_r = 0.0;
  sweep_cmd->add_option("--r", sweep_r, "resistance [pu]")->required();
  sweep_cmd->add_option("--l", l_range_text, "L range start:stop:count")
      ->required();
  sweep_cmd->add_option("--c", c_range_text, "C range start:stop:count")
      ->required();
  sweep_cmd->add_option("--omega", omega_text, "pi, 2pi50 or a decimal");
  sweep_cmd->add_option("--output", output_path, "output path (default stdout)");

  auto* verify_cmd =
      app.add_subcommand("verify-paper", "Published-value comparison reports");
  std::string which;
  double verify_c = 0.1;
  verify_cmd->add_option("--which", which, "table1, table2, limits or flatness")
      ->required()
      ->check(CLI::IsMember({"table1", "table2", "limits", "flatness"}));
  verify_cmd->add_option("--omega", omega_text, "pi, 2pi50 or a decimal");
  verify_cmd->add_option("--c", verify_c, "capacitance for the limits report");
  verify_cmd->add_option("--output", output_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  const double omega = parse_omega(omega_text);

  if (line_cmd->parsed()) {
    gridgeo::net::NetworkSpec spec;
    spec.omega = omega;
    spec.buses = {{"A"}, {"B"}};
    spec.lines = {{"line", "A", "B", arg_r, arg_l, arg_c}};
    const auto report = gridgeo::net::analyze_network(spec);
    if (!report.lines[0].error.empty())
      throw gridgeo::SingularConfigurationError(report.lines[0].error, 0.0);
    emit(output_path, format == "json" ? gridgeo::net::report_json(report)
                                       : gridgeo::net::report_text(report));
    return kExitOk;
  }

  if (net_cmd->parsed()) {
    std::ifstream is(case_path, std::ios::binary);
    if (!is) throw gridgeo::ParseError("--case: cannot open " + case_path);
    std::stringstream buffer;
    buffer << is.rdbuf();
    gridgeo::net::NetworkSpec spec = gridgeo::net::load_network(buffer.str());
    if (net_omega) spec.omega = parse_omega(*net_omega);
    const auto report = gridgeo::net::analyze_network(spec);
    emit(output_path, format == "json" ? gridgeo::net::report_json(report)
                                       : gridgeo::net::report_text(report));
    return kExitOk;
  }

  if (sweep_cmd->parsed()) {
    const auto l_range = parse_range("--l", l_range_text);
    const auto c_range = parse_range("--c", c_range_text);
    if (!(c_range.start > 0.0))
      throw gridgeo::ParseError("--c: range must exclude 0");
    const auto grid =
        gridgeo::lcr::sweep_grid(sweep_r, l_range, c_range, omega);
    emit(output_path, gridgeo::lcr::grid_csv(grid));
    return kExitOk;
  }

  // verify-paper
  gridgeo::verify::Report report;
  if (which == "table1") {
    report = gridgeo::verify::table1(omega);
  } else if (which == "table2") {
    report = gridgeo::verify::table2({1.0, kPi, 2.0 * kPi * 50.0});
  } else if (which == "limits") {
    report = gridgeo::verify::limits(omega, verify_c);
  } else {
    report = gridgeo::verify::flatness(omega);
  }
  emit(output_path, report.render());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const gridgeo::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const gridgeo::SingularConfigurationError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const gridgeo::SingularInputError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const gridgeo::DegenerateStepError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

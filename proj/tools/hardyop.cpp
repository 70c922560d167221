// Command-line front end: `report` and `sweep`.
// Exit codes: 0 success, 2 configuration error, 3 numerical failure, 1 anything else.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hardyop/error.hpp"
#include "hardyop/report.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

hardyop::Json read_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw hardyop::ConfigError("cannot open '" + path + "'");
  try {
    return hardyop::Json::parse(in);
  } catch (const std::exception& e) {
    throw hardyop::ConfigError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw hardyop::ConfigError("cannot write '" + path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toeplitz and Hankel operators on model spaces of finite Blaschke products"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::string family_path;

  auto* report = app.add_subcommand("report", "Single-pair JSON report");
  report->add_option("--config", config_path, "Run configuration (JSON)")->required();
  report->add_option("--out", out_path, "Output path; overrides the config's output field");

  auto* sweep = app.add_subcommand("sweep", "One-parameter family as CSV");
  sweep->add_option("--config", config_path, "Run configuration (JSON)")->required();
  sweep->add_option("--family", family_path, "Family descriptor (JSON)")->required();
  sweep->add_option("--out", out_path, "Output CSV path; stdout when omitted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    const hardyop::RunConfig config = hardyop::parse_run_config(read_json(config_path));
    if (report->parsed()) {
      const auto result = hardyop::build_report(config);
      write_text(out_path.empty() ? config.output : out_path, hardyop::render_report(result.document));
      return result.numerical_failure ? kExitNumerical : 0;
    }
    const auto result = hardyop::run_sweep(config, read_json(family_path));
    write_text(out_path, result.csv);
    return result.numerical_failure ? kExitNumerical : 0;
  } catch (const hardyop::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const hardyop::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

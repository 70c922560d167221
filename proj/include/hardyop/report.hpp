#pragma once

// Batch front end: run configurations, single-pair JSON reports and
// one-parameter sweeps rendered as CSV.

#include <cstdint>
#include <string>
#include <vector>

#include "hardyop/blaschke.hpp"
#include "hardyop/hardy_core.hpp"
#include "hardyop/rational.hpp"
#include "hardyop/serialization.hpp"

namespace hardyop {

inline constexpr int kReportSchema = 1;

/// Every check a report can run, in the order they appear in the output.
const std::vector<std::string>& known_checks();

struct RunConfig {
  BlaschkeProduct inner;
  Polynomial symbol;
  double p = 2.0;
  std::size_t grid_m = CircleGrid::kDefaultPoints;
  std::size_t band_n = CircleGrid::kDefaultBand;
  std::vector<std::string> checks;  ///< defaults to known_checks()
  std::string output;               ///< empty means stdout
  std::uint64_t seed = 0;

  CircleGrid grid() const { return CircleGrid(grid_m, band_n); }
};

/// Throws ConfigError for malformed fields or unknown check names.
RunConfig parse_run_config(const Json& j);

struct ReportResult {
  Json document;
  bool numerical_failure = false;  ///< an IllConditioned or RankAmbiguity error was recorded
};

ReportResult build_report(const RunConfig& config);

/// One-parameter family:
///   {"kind": "symbol_root_path", "fixed_roots": [...], "moving_root_start": z0,
///    "direction": d, "values": [t...], "lead": c, "probe": z}
///     a_t = c prod (z - r) (z - (z0 + t d)); probe defaults to the zero of I nearest z0.
///   {"kind": "probe_radius", "angle": theta, "values": [r...]}
///     the configured symbol with probes r e^{i theta}.
struct SweepResult {
  std::string csv;
  bool numerical_failure = false;
};

SweepResult run_sweep(const RunConfig& config, const Json& family);

/// Byte-stable text forms used by the CLI.
std::string render_report(const Json& document);

}  // namespace hardyop

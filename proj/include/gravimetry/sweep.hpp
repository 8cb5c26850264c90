#pragma once

// Parameter sweeps over (tau, r, theta, s) and the audit of
// printed closed forms against the library.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gravimetry/dataset.hpp"
#include "gravimetry/gaussian.hpp"

namespace gravimetry {

enum class SweepMode {
  kQfiVsTime,
  kRqfiTime,
  kRqfiMap,
  kRatioMap,
  kWignerGrid,
  kSensitivity,
  kMontecarlo,
  kAudit,
};

enum class Units { kNatural, kSi };
enum class Spacing { kLinear, kLog };

struct Range {
  double min;
  double max;
  std::size_t count;
  Spacing spacing = Spacing::kLinear;
  bool endpoint = true;  // false: [min, max) like a periodic axis
};

/// Grid points of a range. Throws ConfigError (field `field`) when count is
/// zero or log spacing has a non-positive endpoint.
std::vector<double> expand(const Range& range, const std::string& field = "range");

struct SweepConfig {
  SweepMode mode = SweepMode::kQfiVsTime;
  Units units = Units::kNatural;
  ProbeParams params = ProbeParams::natural();

  // Empty grids are filled with per-mode defaults by resolve().
  std::vector<double> tau;
  std::vector<double> r;
  std::vector<double> theta;
  std::vector<double> s;      // 0 = position, inf = momentum
  std::vector<double> z;      // wigner only
  std::vector<double> p;      // wigner only
  std::vector<double> trials; // montecarlo: n per experiment

  std::size_t experiments = 200;
  std::uint64_t seed = 0;

  std::string output;  // empty: standard output
  Format format = Format::kCsv;
};

std::string mode_name(SweepMode mode);
/// Accepts subcommand names (qfi, wigner, ...) and long forms (qfi-vs-time, ...).
std::optional<SweepMode> parse_mode(const std::string& name);

/// Column header of the dataset produced for `mode`.
std::vector<std::string> columns_for(SweepMode mode);

/// Fills defaulted grids and checks mode-specific requirements.
/// Throws ConfigError with the offending field path.
SweepConfig resolve(SweepConfig config);

/// One row per grid point; tau varies slowest, then r, theta, s.
Dataset run_sweep(const SweepConfig& config);

/// Per printed formula: the largest relative deviation from the library
/// value over the audit grid and where it occurs.
Dataset run_audit(const SweepConfig& config);

}  // namespace gravimetry

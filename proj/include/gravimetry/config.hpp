#pragma once

// JSON sweep configuration files and command-line overrides.
//
// {
//   "mode": "rqfi",                       // optional; the subcommand wins
//   "units": "natural" | "si",
//   "params": {"m": 2.21e-25, "sigma0": 3e-8, "hbar": 1.054571817e-34, "g": 9.81},
//   "grids": {
//     "tau":   {"min": 0.01, "max": 50, "count": 200, "spacing": "log"},
//     "r":     [0.4, 0.5, 0.6],
//     "theta": {"min": 0, "max": "pi", "count": 181, "endpoint": false},
//     "s":     ["inf", 0, 1],
//     "n":     [10000]
//   },
//   "experiments": 200,
//   "seed": 42,
//   "output": "rqfi.csv",
//   "format": "csv"
// }
//
// Numeric entries may be strings using inf, pi and simple fractions of pi
// ("3pi/4", "0.25pi", "pi/2"). A grid may also be written as a string:
// "0.01:50:200:log" (range, with optional ":open" to drop the endpoint)
// or "0,pi/4,pi/2" (list).

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gravimetry/sweep.hpp"

namespace gravimetry {

/// Parses "1.5", "inf", "pi", "3pi/4", "0.5*pi", "1e-3". Throws ConfigError.
double parse_scalar(std::string_view token, const std::string& field);

/// Parses a grid given as JSON array, range object or shorthand string.
std::vector<double> parse_grid(const nlohmann::json& value, const std::string& field);

/// Builds a config from a parsed JSON document. Throws ConfigError.
SweepConfig config_from_json(const nlohmann::json& doc);

/// Reads and parses a config file; unreadable files raise IoError and
/// malformed JSON raises ConfigError.
nlohmann::json load_config_file(const std::string& path);

}  // namespace gravimetry

#include "gravimetry/config.hpp"

#include <cerrno>
#include <cstdlib>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>

#include "gravimetry/errors.hpp"

namespace gravimetry {

namespace {

std::string trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t");
  return std::string(s.substr(begin, end - begin + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(s);
  while (std::getline(in, part, sep)) parts.push_back(trim(part));
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

double parse_plain(const std::string& s, const std::string& field) {
  if (s == "inf" || s == "+inf" || s == "infinity") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  if (s.empty()) throw ConfigError(field, "empty number");
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE) {
    throw ConfigError(field, "not a number: '" + s + "'");
  }
  return v;
}

double scalar_from_json(const nlohmann::json& v, const std::string& field) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return parse_scalar(v.get<std::string>(), field);
  throw ConfigError(field, "expected a number");
}

std::size_t count_from_json(const nlohmann::json& v, const std::string& field) {
  if (v.is_number_unsigned()) return v.get<std::size_t>();
  if (v.is_number_integer() && v.get<long long>() >= 0) return v.get<std::size_t>();
  if (v.is_string()) {
    const double d = parse_scalar(v.get<std::string>(), field);
    if (d >= 0 && d == std::floor(d) && d < 1e15) return static_cast<std::size_t>(d);
  }
  throw ConfigError(field, "expected a non-negative integer");
}

std::uint64_t seed_from_json(const nlohmann::json& v) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<long long>() >= 0) return v.get<std::uint64_t>();
  if (v.is_string()) {
    const std::string s = trim(v.get<std::string>());
    errno = 0;
    char* end = nullptr;
    const unsigned long long x = std::strtoull(s.c_str(), &end, 10);
    if (!s.empty() && s[0] != '-' && end == s.c_str() + s.size() && errno == 0) return x;
  }
  throw ConfigError("seed", "expected an unsigned 64-bit integer");
}

Spacing parse_spacing(const std::string& s, const std::string& field) {
  if (s == "linear" || s == "lin") return Spacing::kLinear;
  if (s == "log") return Spacing::kLog;
  throw ConfigError(field, "spacing must be 'linear' or 'log'");
}

std::vector<double> grid_from_shorthand(const std::string& text, const std::string& field) {
  if (text.find(':') == std::string::npos) {
    std::vector<double> values;
    const auto parts = split(text, ',');
    for (std::size_t i = 0; i < parts.size(); ++i) {
      values.push_back(parse_scalar(parts[i], field + "[" + std::to_string(i) + "]"));
    }
    if (values.empty()) throw ConfigError(field, "empty grid");
    return values;
  }
  const auto parts = split(text, ':');
  if (parts.size() < 3 || parts.size() > 5) {
    throw ConfigError(field, "range must be min:max:count[:linear|log][:open]");
  }
  Range range{parse_scalar(parts[0], field + ".min"), parse_scalar(parts[1], field + ".max"),
              count_from_json(nlohmann::json(parts[2]), field + ".count")};
  for (std::size_t i = 3; i < parts.size(); ++i) {
    if (parts[i] == "open") {
      range.endpoint = false;
    } else if (parts[i] == "closed") {
      range.endpoint = true;
    } else {
      range.spacing = parse_spacing(parts[i], field + ".spacing");
    }
  }
  return expand(range, field);
}

void reject_unknown(const nlohmann::json& obj, const std::set<std::string>& known,
                    const std::string& prefix) {
  for (const auto& [key, _] : obj.items()) {
    if (!known.contains(key)) throw ConfigError(prefix + key, "unknown option");
  }
}

}  // namespace

double parse_scalar(std::string_view token, const std::string& field) {
  const std::string s = trim(token);
  const auto pi_at = s.find("pi");
  if (pi_at == std::string::npos) return parse_plain(s, field);

  std::string coef = trim(std::string_view(s).substr(0, pi_at));
  if (!coef.empty() && coef.back() == '*') coef = trim(coef.substr(0, coef.size() - 1));
  double value = std::numbers::pi;
  if (coef == "-") {
    value = -value;
  } else if (!coef.empty() && coef != "+") {
    value *= parse_plain(coef, field);
  }
  const std::string rest = trim(std::string_view(s).substr(pi_at + 2));
  if (!rest.empty()) {
    if (rest.front() != '/') throw ConfigError(field, "cannot parse '" + s + "'");
    const double denom = parse_plain(trim(rest.substr(1)), field);
    if (denom == 0.0) throw ConfigError(field, "division by zero in '" + s + "'");
    value /= denom;
  }
  return value;
}

std::vector<double> parse_grid(const nlohmann::json& value, const std::string& field) {
  if (value.is_number()) return {value.get<double>()};
  if (value.is_string()) return grid_from_shorthand(value.get<std::string>(), field);
  if (value.is_array()) {
    std::vector<double> values;
    for (std::size_t i = 0; i < value.size(); ++i) {
      values.push_back(scalar_from_json(value[i], field + "[" + std::to_string(i) + "]"));
    }
    if (values.empty()) throw ConfigError(field, "empty grid");
    return values;
  }
  if (value.is_object()) {
    reject_unknown(value, {"min", "max", "count", "spacing", "endpoint"}, field + ".");
    for (const char* key : {"min", "max", "count"}) {
      if (!value.contains(key)) throw ConfigError(field + "." + key, "missing");
    }
    Range range{scalar_from_json(value["min"], field + ".min"),
                scalar_from_json(value["max"], field + ".max"),
                count_from_json(value["count"], field + ".count")};
    if (value.contains("spacing")) {
      if (!value["spacing"].is_string()) throw ConfigError(field + ".spacing", "expected a string");
      range.spacing = parse_spacing(value["spacing"].get<std::string>(), field + ".spacing");
    }
    if (value.contains("endpoint")) {
      if (!value["endpoint"].is_boolean()) {
        throw ConfigError(field + ".endpoint", "expected true or false");
      }
      range.endpoint = value["endpoint"].get<bool>();
    }
    return expand(range, field);
  }
  throw ConfigError(field, "expected a list, a range object or a string");
}

SweepConfig config_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ConfigError("<root>", "config must be a JSON object");
  reject_unknown(doc,
                 {"mode", "units", "params", "grids", "experiments", "seed", "output", "format"},
                 "");
  SweepConfig config;

  if (doc.contains("mode")) {
    const auto& v = doc["mode"];
    const auto mode = v.is_string() ? parse_mode(v.get<std::string>()) : std::nullopt;
    if (!mode) throw ConfigError("mode", "unknown sweep mode");
    config.mode = *mode;
  }

  if (doc.contains("units")) {
    const auto& v = doc["units"];
    const std::string u = v.is_string() ? v.get<std::string>() : "";
    if (u == "natural") {
      config.units = Units::kNatural;
    } else if (u == "si") {
      config.units = Units::kSi;
    } else {
      throw ConfigError("units", "must be 'natural' or 'si'");
    }
  }

  const nlohmann::json params =
      doc.contains("params") ? doc["params"] : nlohmann::json::object();
  if (!params.is_object()) throw ConfigError("params", "expected an object");
  reject_unknown(params, {"m", "sigma0", "hbar", "g"}, "params.");
  const auto param = [&](const char* key) -> std::optional<double> {
    if (!params.contains(key)) return std::nullopt;
    return scalar_from_json(params[key], std::string("params.") + key);
  };
  const double g = param("g").value_or(9.81);
  try {
    if (config.units == Units::kNatural) {
      for (const char* key : {"m", "sigma0", "hbar"}) {
        if (auto v = param(key); v && *v != 1.0) {
          throw ConfigError(std::string("params.") + key, "is fixed to 1 in natural units");
        }
      }
      config.params = ProbeParams::natural(g);
    } else {
      const auto m = param("m");
      const auto sigma0 = param("sigma0");
      if (!m) throw ConfigError("params.m", "required in si units");
      if (!sigma0) throw ConfigError("params.sigma0", "required in si units");
      config.params = ProbeParams(*m, *sigma0, param("hbar").value_or(kReducedPlanck), g);
    }
  } catch (const InvalidArgumentError& e) {
    throw ConfigError("params", e.what());
  }

  if (doc.contains("grids")) {
    const auto& grids = doc["grids"];
    if (!grids.is_object()) throw ConfigError("grids", "expected an object");
    reject_unknown(grids, {"tau", "r", "theta", "s", "z", "p", "n"}, "grids.");
    const auto grid = [&](const char* key, std::vector<double>& out) {
      if (grids.contains(key)) out = parse_grid(grids[key], std::string("grids.") + key);
    };
    grid("tau", config.tau);
    grid("r", config.r);
    grid("theta", config.theta);
    grid("s", config.s);
    grid("z", config.z);
    grid("p", config.p);
    grid("n", config.trials);
  }

  if (doc.contains("experiments")) {
    config.experiments = count_from_json(doc["experiments"], "experiments");
  }
  if (doc.contains("seed")) config.seed = seed_from_json(doc["seed"]);
  if (doc.contains("output")) {
    if (!doc["output"].is_string()) throw ConfigError("output", "expected a path string");
    config.output = doc["output"].get<std::string>();
  }
  if (doc.contains("format")) {
    const auto& v = doc["format"];
    const std::string f = v.is_string() ? v.get<std::string>() : "";
    if (f == "csv") {
      config.format = Format::kCsv;
    } else if (f == "json") {
      config.format = Format::kJson;
    } else {
      throw ConfigError("format", "must be 'csv' or 'json'");
    }
  }
  return config;
}

nlohmann::json load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return nlohmann::json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("<file>", std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace gravimetry

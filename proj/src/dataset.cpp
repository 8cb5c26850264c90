#include "gravimetry/dataset.hpp"

#include <fmt/format.h>

#include <cmath>
#include <fstream>
#include <limits>
#include <json.hpp>
#include <optional>
#include <ostream>

#include "gravimetry/errors.hpp"

namespace gravimetry {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string json_value(const Cell& cell) {
  if (const double* v = std::get_if<double>(&cell)) {
    if (std::isfinite(*v)) return format_number(*v);
    return nlohmann::json(format_number(*v)).dump();
  }
  return nlohmann::json(std::get<std::string>(cell)).dump();
}

std::optional<double> non_finite(const std::string& s) {
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  return std::nullopt;
}

}  // namespace

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", value);
}

void write_csv(std::ostream& out, const Dataset& data) {
  for (std::size_t c = 0; c < data.columns.size(); ++c) {
    out << (c ? "," : "") << data.columns[c];
  }
  out << '\n';
  for (const auto& row : data.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      if (const double* v = std::get_if<double>(&row[c])) {
        out << format_number(*v);
      } else {
        out << csv_field(std::get<std::string>(row[c]));
      }
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const Dataset& data) {
  out << '[';
  for (std::size_t r = 0; r < data.rows.size(); ++r) {
    out << (r ? ",\n  {" : "\n  {");
    const auto& row = data.rows[r];
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << (c ? ", " : "") << nlohmann::json(data.columns[c]).dump() << ": "
          << json_value(row[c]);
    }
    out << '}';
  }
  out << (data.rows.empty() ? "]\n" : "\n]\n");
}

void emit(const Dataset& data, Format format, const std::string& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  if (format == Format::kCsv) {
    write_csv(file, data);
  } else {
    write_json(file, data);
  }
  file.flush();
  if (!file) throw IoError("failed writing '" + path + "'");
}

Dataset parse_json_dataset(std::string_view text, const std::vector<std::string>& columns) {
  const nlohmann::json doc = nlohmann::json::parse(text);
  Dataset data{columns, {}};
  for (const auto& obj : doc) {
    std::vector<Cell> row;
    row.reserve(columns.size());
    for (const auto& name : columns) {
      const auto& v = obj.at(name);
      if (v.is_number()) {
        row.emplace_back(v.get<double>());
      } else {
        const auto s = v.get<std::string>();
        if (auto x = non_finite(s)) {
          row.emplace_back(*x);
        } else {
          row.emplace_back(s);
        }
      }
    }
    data.rows.push_back(std::move(row));
  }
  return data;
}

}  // namespace gravimetry

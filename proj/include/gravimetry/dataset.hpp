#pragma once

// Tabular sweep output and its CSV / JSON serializations.
//
// Numbers are written with 17 significant digits so that parsing the output
// recovers every double exactly. Non-finite numbers are written as inf,
// -inf and nan (JSON: as strings).

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace gravimetry {

using Cell = std::variant<double, std::string>;

struct Dataset {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class Format { kCsv, kJson };

std::string format_number(double value);

void write_csv(std::ostream& out, const Dataset& data);
void write_json(std::ostream& out, const Dataset& data);

/// Throws IoError if the file cannot be written.
void emit(const Dataset& data, Format format, const std::string& path);

/// Parses output of write_json back into rows ordered by `columns`.
Dataset parse_json_dataset(std::string_view text, const std::vector<std::string>& columns);

}  // namespace gravimetry

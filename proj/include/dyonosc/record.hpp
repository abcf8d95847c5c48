#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace dyonosc {

using Scalar = std::variant<std::int64_t, double, std::string, bool>;

/// Tabular command output. Floats are written with 17 significant digits so
/// that to_json() followed by from_json() reproduces every value exactly.
struct OutputRecord {
  static constexpr const char* kSchemaVersion = "1.0";

  std::string schema_version = kSchemaVersion;
  std::string command;
  std::vector<std::pair<std::string, Scalar>> params;
  std::vector<std::string> columns;
  std::vector<std::vector<Scalar>> rows;

  void set_param(const std::string& key, Scalar value);
  /// Throws Errc::invalid_parameter when the row width differs from columns.
  void add_row(std::vector<Scalar> row);

  std::string to_json() const;
  /// Header line of column names, then one line per row (RFC 4180 quoting).
  std::string to_csv() const;
  static OutputRecord from_json(const std::string& text);

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

/// "%.17g", with ".0" appended when the result would read back as an integer.
std::string format_double(double v);

}  // namespace dyonosc

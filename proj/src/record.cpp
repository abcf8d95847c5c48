#include "dyonosc/record.hpp"

#include <cmath>
#include <cstdio>
#include "json.hpp"
#include <sstream>

#include "dyonosc/error.hpp"

namespace dyonosc {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

std::string json_scalar(const Scalar& v) {
  return std::visit(overloaded{
                        [](std::int64_t i) { return std::to_string(i); },
                        [](double d) {
                          if (std::isnan(d)) return std::string("\"NaN\"");
                          if (std::isinf(d)) return std::string(d > 0 ? "\"Infinity\"" : "\"-Infinity\"");
                          return format_double(d);
                        },
                        [](const std::string& s) { return json_string(s); },
                        [](bool b) { return std::string(b ? "true" : "false"); },
                    },
                    v);
}

std::string csv_field(const Scalar& v) {
  return std::visit(overloaded{
                        [](std::int64_t i) { return std::to_string(i); },
                        [](double d) { return format_double(d); },
                        [](const std::string& s) {
                          if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
                          std::string out = "\"";
                          for (char c : s) {
                            if (c == '"') out += '"';
                            out += c;
                          }
                          return out + "\"";
                        },
                        [](bool b) { return std::string(b ? "true" : "false"); },
                    },
                    v);
}

Scalar from_json_value(const nlohmann::json& j) {
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_number_float()) return j.get<double>();
  if (j.is_string()) return j.get<std::string>();
  throw Error(Errc::invalid_parameter, "unsupported JSON value in record: " + j.dump());
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

void OutputRecord::set_param(const std::string& key, Scalar value) {
  for (auto& [k, v] : params) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  params.emplace_back(key, std::move(value));
}

void OutputRecord::add_row(std::vector<Scalar> row) {
  if (row.size() != columns.size()) {
    throw Error(Errc::invalid_parameter, "row has " + std::to_string(row.size()) + " fields, expected " +
                                             std::to_string(columns.size()));
  }
  rows.push_back(std::move(row));
}

std::string OutputRecord::to_json() const {
  std::ostringstream out;
  out << "{\"schema_version\":" << json_string(schema_version) << ",\"command\":" << json_string(command)
      << ",\"params\":{";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out << ',';
    out << json_string(params[i].first) << ':' << json_scalar(params[i].second);
  }
  out << "},\"columns\":[";
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out << ',';
    out << json_string(columns[i]);
  }
  out << "],\"rows\":[";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out << (r ? ",\n" : "\n") << '{';
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c) out << ',';
      out << json_string(columns[c]) << ':' << json_scalar(rows[r][c]);
    }
    out << '}';
  }
  out << "]}\n";
  return out.str();
}

std::string OutputRecord::to_csv() const {
  std::ostringstream out;
  for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << csv_field(columns[c]);
  out << "\r\n";
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_field(row[c]);
    out << "\r\n";
  }
  return out.str();
}

OutputRecord OutputRecord::from_json(const std::string& text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::invalid_parameter, std::string("malformed record: ") + e.what());
  }
  OutputRecord r;
  r.schema_version = j.at("schema_version").get<std::string>();
  r.command = j.at("command").get<std::string>();
  for (const auto& [k, v] : j.at("params").items()) r.params.emplace_back(k, from_json_value(v));
  for (const auto& c : j.at("columns")) r.columns.push_back(c.get<std::string>());
  for (const auto& row : j.at("rows")) {
    std::vector<Scalar> values;
    for (const auto& c : r.columns) values.push_back(from_json_value(row.at(c)));
    r.rows.push_back(std::move(values));
  }
  return r;
}

}  // namespace dyonosc

#pragma once

// Tabular run output with CSV and JSON emitters. Reals are written with 12
// significant digits so that re-parsing and re-emitting a CSV is lossless.

#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <fmt/format.h>
#include <json.hpp>

namespace gps {

inline constexpr std::string_view kCsvMagic = "# gps-spectra v1";

using Cell = std::variant<std::monostate, long long, double, std::string>;

inline std::string format_number(double v) { return fmt::format("{:.12g}", v); }

inline std::string format_cell(const Cell& c) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_number(v); }
    std::string operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, c);
}

struct Report {
  std::vector<std::string> preamble;  // comment lines between magic and column header
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> footer;    // trailing comment lines
  nlohmann::json numerics = nlohmann::json::object();
  int exit_status = 0;
};

inline void write_csv(const Report& r, std::ostream& os) {
  os << kCsvMagic << '\n';
  for (const auto& line : r.preamble) os << "# " << line << '\n';
  for (std::size_t i = 0; i < r.columns.size(); ++i) os << (i ? "," : "") << r.columns[i];
  os << '\n';
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_cell(row[i]);
    os << '\n';
  }
  for (const auto& line : r.footer) os << "# " << line << '\n';
}

inline nlohmann::json cell_to_json(const Cell& c) {
  struct Visitor {
    nlohmann::json operator()(std::monostate) const { return nullptr; }
    nlohmann::json operator()(long long v) const { return v; }
    nlohmann::json operator()(double v) const { return v; }
    nlohmann::json operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, c);
}

inline void write_json(const Report& r, std::ostream& os) {
  nlohmann::json doc;
  doc["format"] = "gps-spectra v1";
  doc["numerics"] = r.numerics;
  doc["results"] = nlohmann::json::array();
  for (const auto& row : r.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size() && i < r.columns.size(); ++i) obj[r.columns[i]] = cell_to_json(row[i]);
    doc["results"].push_back(std::move(obj));
  }
  if (!r.preamble.empty() || !r.footer.empty()) {
    auto notes = nlohmann::json::array();
    for (const auto& s : r.preamble) notes.push_back(s);
    for (const auto& s : r.footer) notes.push_back(s);
    doc["notes"] = std::move(notes);
  }
  os << doc.dump(2) << '\n';
}

namespace detail {

inline std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

inline Cell parse_cell(const std::string& s) {
  if (s.empty()) return std::monostate{};
  char* end = nullptr;
  const long long as_int = std::strtoll(s.c_str(), &end, 10);
  if (end == s.c_str() + s.size()) return as_int;
  const double as_double = std::strtod(s.c_str(), &end);
  if (end == s.c_str() + s.size()) return as_double;
  return s;
}

}  // namespace detail

/// Parses CSV written by write_csv. Cells are typed as integer, real,
/// string or empty.
inline Report read_csv(std::istream& is) {
  Report r;
  std::string line;
  if (!std::getline(is, line) || line != kCsvMagic) throw std::runtime_error("read_csv: missing magic line");
  bool have_columns = false;
  while (std::getline(is, line)) {
    if (line.rfind("# ", 0) == 0) {
      (have_columns ? r.footer : r.preamble).push_back(line.substr(2));
    } else if (!have_columns) {
      r.columns = detail::split(line, ',');
      have_columns = true;
    } else {
      std::vector<Cell> row;
      for (const auto& f : detail::split(line, ',')) row.push_back(detail::parse_cell(f));
      r.rows.push_back(std::move(row));
    }
  }
  return r;
}

}  // namespace gps

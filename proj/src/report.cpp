#include "aoicoex/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace aoicoex {

std::string format_double(double value, bool full_precision) {
  if (std::isnan(value)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof(buf), full_precision ? "%.17g" : "%.6g", value);
  return buf;
}

namespace {

std::string format_cell(const Cell& cell, bool full_precision) {
  if (const double* value = std::get_if<double>(&cell)) {
    return format_double(*value, full_precision);
  }
  return std::get<std::string>(cell);
}

}  // namespace

std::string to_csv(const Table& table, bool full_precision) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out.push_back(',');
    out += table.columns[c];
  }
  out.push_back('\n');
  for (const std::vector<Cell>& row : table.rows) {
    if (row.size() != table.columns.size()) {
      throw std::logic_error("row width does not match header");
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out.push_back(',');
      out += format_cell(row[c], full_precision);
    }
    out.push_back('\n');
  }
  return out;
}

void write_csv(const std::filesystem::path& path, const Table& table,
               bool full_precision) {
  std::ofstream file(path, std::ios::binary);  // binary keeps LF endings
  if (!file) throw std::runtime_error("cannot open " + path.string());
  file << to_csv(table, full_precision);
  if (!file) throw std::runtime_error("write failed for " + path.string());
}

std::string to_json(const Table& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const std::vector<Cell>& row : table.rows) {
    if (row.size() != table.columns.size()) {
      throw std::logic_error("row width does not match header");
    }
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (const double* value = std::get_if<double>(&row[c])) {
        if (std::isnan(*value)) {
          obj[table.columns[c]] = nullptr;  // JSON has no NaN literal
        } else {
          obj[table.columns[c]] = *value;
        }
      } else {
        obj[table.columns[c]] = std::get<std::string>(row[c]);
      }
    }
    rows.push_back(std::move(obj));
  }
  return rows.dump(2) + "\n";
}

void write_json(const std::filesystem::path& path, const Table& table) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path.string());
  file << to_json(table);
  if (!file) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace aoicoex

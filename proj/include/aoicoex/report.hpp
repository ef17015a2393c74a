#pragma once

#include <filesystem>
#include <string>

#include "aoicoex/scenarios.hpp"

// Locale-independent tabular output: CSV with '.' decimals, fixed column
// order, LF line endings, 6 significant digits by default and 17 with the
// full-precision option. Missing values print as "nan".

namespace aoicoex {

// "%.6g" or "%.17g" with NaN normalized to "nan".
std::string format_double(double value, bool full_precision);

std::string to_csv(const Table& table, bool full_precision);

void write_csv(const std::filesystem::path& path, const Table& table,
               bool full_precision);

// JSON mirror of the same table: array of row objects keyed by column name.
std::string to_json(const Table& table);

void write_json(const std::filesystem::path& path, const Table& table);

}  // namespace aoicoex

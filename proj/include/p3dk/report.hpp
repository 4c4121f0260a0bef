// SPDX-License-Identifier: MIT
#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace p3dk {

struct BenchRow {
  std::string label;
  double value = 0.0;

  friend bool operator==(const BenchRow &, const BenchRow &) = default;
};

struct BenchReport {
  std::string experiment;
  std::string unit;
  std::vector<BenchRow> rows;
  // Ordered key/value pairs: timestamp, trial counts, fit statistics,
  // reference figures.
  std::vector<std::pair<std::string, std::string>> metadata;

  const std::string *find_metadata(std::string_view key) const;
};

// CSV layout:
//   # experiment: <name>
//   # <key>: <value>           (one per metadata entry)
//   label,value,unit
//   <label>,<value>,<unit>
// Values are written in shortest round-trip form.
std::string to_csv(const BenchReport &report);
/// FormatError on a missing header or malformed row.
BenchReport parse_csv(std::string_view text);

/// Single-polyline line chart, x axis = row labels in order.
std::string to_svg(const BenchReport &report);

/// Both throw IoError when the path cannot be written.
void emit_csv(const BenchReport &report, const std::filesystem::path &path);
void emit_svg(const BenchReport &report, const std::filesystem::path &path);

}  // namespace p3dk

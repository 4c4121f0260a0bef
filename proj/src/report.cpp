// SPDX-License-Identifier: MIT

#include "p3dk/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>

#include "p3dk/error.hpp"

namespace p3dk {

namespace {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw FormatError("not a number: " + std::string(s));
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

void write_file(const std::filesystem::path &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  out << content;
  out.flush();
  if (!out) {
    throw IoError("failed writing " + path.string());
  }
}

}  // namespace

const std::string *BenchReport::find_metadata(std::string_view key) const {
  for (const auto &[k, v] : metadata) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::string to_csv(const BenchReport &report) {
  std::string out = "# experiment: " + report.experiment + "\n";
  for (const auto &[k, v] : report.metadata) {
    out += "# " + k + ": " + v + "\n";
  }
  out += "label,value,unit\n";
  for (const BenchRow &row : report.rows) {
    out += row.label + "," + format_double(row.value) + "," + report.unit + "\n";
  }
  return out;
}

BenchReport parse_csv(std::string_view text) {
  BenchReport report;
  bool header_seen = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    if (line.empty()) continue;

    if (line.front() == '#') {
      std::string_view body = trim(line.substr(1));
      const std::size_t colon = body.find(':');
      if (colon == std::string_view::npos) continue;
      const std::string key(trim(body.substr(0, colon)));
      const std::string value(trim(body.substr(colon + 1)));
      if (key == "experiment") {
        report.experiment = value;
      } else {
        report.metadata.emplace_back(key, value);
      }
      continue;
    }
    if (!header_seen) {
      if (line != "label,value,unit") {
        throw FormatError("expected CSV header 'label,value,unit'");
      }
      header_seen = true;
      continue;
    }
    const std::size_t c1 = line.find(',');
    const std::size_t c2 = line.rfind(',');
    if (c1 == std::string_view::npos || c1 == c2) {
      throw FormatError("malformed CSV row: " + std::string(line));
    }
    report.rows.push_back({std::string(line.substr(0, c1)), parse_double(line.substr(c1 + 1, c2 - c1 - 1))});
    report.unit = std::string(line.substr(c2 + 1));
  }
  if (!header_seen) {
    throw FormatError("CSV header missing");
  }
  return report;
}

std::string to_svg(const BenchReport &report) {
  constexpr double kWidth = 640, kHeight = 400;
  constexpr double kLeft = 70, kRight = 20, kTop = 40, kBottom = 60;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;

  double y_max = 0.0;
  for (const BenchRow &r : report.rows) y_max = std::max(y_max, r.value);
  if (y_max <= 0.0) y_max = 1.0;
  const std::size_t n = report.rows.size();

  auto x_at = [&](std::size_t i) {
    return kLeft + (n <= 1 ? plot_w / 2 : plot_w * static_cast<double>(i) / static_cast<double>(n - 1));
  };
  auto y_at = [&](double v) { return kTop + plot_h * (1.0 - v / y_max); };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" viewBox=\"0 0 640 400\">\n";
  svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "  <text x=\"320\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" +
         xml_escape(report.experiment) + "</text>\n";
  svg += "  <line x1=\"70\" y1=\"340\" x2=\"620\" y2=\"340\" stroke=\"black\"/>\n";
  svg += "  <line x1=\"70\" y1=\"40\" x2=\"70\" y2=\"340\" stroke=\"black\"/>\n";
  svg += "  <text x=\"345\" y=\"385\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" +
         xml_escape(report.experiment) + " (x)</text>\n";
  svg += "  <text x=\"16\" y=\"190\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
         "transform=\"rotate(-90 16 190)\">" +
         xml_escape(report.unit) + "</text>\n";
  svg += "  <text x=\"64\" y=\"44\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">" +
         format_double(y_max) + "</text>\n";
  svg += "  <text x=\"64\" y=\"340\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">0</text>\n";

  svg += "  <polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < n; ++i) {
    if (i) svg += ' ';
    svg += format_double(x_at(i)) + "," + format_double(y_at(report.rows[i].value));
  }
  svg += "\"/>\n";
  for (std::size_t i = 0; i < n; ++i) {
    svg += "  <text x=\"" + format_double(x_at(i)) +
           "\" y=\"356\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">" +
           xml_escape(report.rows[i].label) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

void emit_csv(const BenchReport &report, const std::filesystem::path &path) {
  write_file(path, to_csv(report));
}

void emit_svg(const BenchReport &report, const std::filesystem::path &path) {
  write_file(path, to_svg(report));
}

}  // namespace p3dk

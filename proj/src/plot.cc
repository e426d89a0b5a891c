// Copyright 2026 The OK-IE Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "okie/plot.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "okie/text.h"

namespace okie {

namespace {

constexpr double kWidth = 760.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 70.0;
constexpr double kRight = kWidth - 180.0;  // legend gutter on the right
constexpr double kTop = 30.0;
constexpr double kBottom = kHeight - 55.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                          "#ff7f0e", "#9467bd", "#8c564b"};

std::string escape_xml(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string percent_label(double fraction) {
  return format_fixed(100.0 * fraction, 1) + "%";
}

}  // namespace

std::string render_curves_svg(const std::vector<CurveSeries>& series) {
  double min_fraction = 1.0, max_fraction = 0.0;
  for (const auto& s : series) {
    for (const auto& point : s.points) {
      min_fraction = std::min(min_fraction, point.fraction);
      max_fraction = std::max(max_fraction, point.fraction);
    }
  }
  if (series.empty() || max_fraction <= 0.0) {
    min_fraction = 0.0;
    max_fraction = 1.0;
  }
  if (max_fraction == min_fraction) {
    // A single fraction still needs a non-degenerate axis.
    min_fraction = std::max(0.0, min_fraction * 0.5);
    max_fraction = max_fraction * 1.5 + 1e-9;
  }

  auto x_of = [&](double fraction) {
    return kLeft + (fraction - min_fraction) / (max_fraction - min_fraction) *
                       (kRight - kLeft);
  };
  auto y_of = [&](double f1) { return kBottom - f1 * (kBottom - kTop); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
      << kHeight << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Axes and y grid every 20 points of F1.
  for (int tick = 0; tick <= 100; tick += 20) {
    double y = y_of(tick / 100.0);
    svg << "<line x1=\"" << kLeft << "\" y1=\"" << y << "\" x2=\"" << kRight
        << "\" y2=\"" << y << "\" stroke=\"#dddddd\"/>\n";
    svg << "<text x=\"" << kLeft - 8 << "\" y=\"" << y + 4
        << "\" text-anchor=\"end\" font-size=\"12\">" << tick << "</text>\n";
  }
  svg << "<line x1=\"" << kLeft << "\" y1=\"" << kBottom << "\" x2=\"" << kRight
      << "\" y2=\"" << kBottom << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft
      << "\" y2=\"" << kBottom << "\" stroke=\"black\"/>\n";

  // One x tick per distinct fraction.
  std::set<double> fractions;
  for (const auto& s : series) {
    for (const auto& point : s.points) fractions.insert(point.fraction);
  }
  for (double fraction : fractions) {
    double x = x_of(fraction);
    svg << "<line x1=\"" << x << "\" y1=\"" << kBottom << "\" x2=\"" << x
        << "\" y2=\"" << kBottom + 5 << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << x << "\" y=\"" << kBottom + 20
        << "\" text-anchor=\"middle\" font-size=\"12\">"
        << percent_label(fraction) << "</text>\n";
  }

  svg << "<text x=\"" << (kLeft + kRight) / 2 << "\" y=\"" << kHeight - 12
      << "\" text-anchor=\"middle\" font-size=\"13\">training data "
         "fraction</text>\n";
  svg << "<text x=\"18\" y=\"" << (kTop + kBottom) / 2
      << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 "
         "18 "
      << (kTop + kBottom) / 2 << ")\">F1</text>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))];
    std::ostringstream points;
    for (const auto& point : series[s].points) {
      points << x_of(point.fraction) << "," << y_of(point.f1) << " ";
    }
    if (series[s].points.size() > 1) {
      svg << "<polyline fill=\"none\" stroke=\"" << color
          << "\" stroke-width=\"2\" points=\"" << points.str() << "\"/>\n";
    }
    for (const auto& point : series[s].points) {
      svg << "<circle cx=\"" << x_of(point.fraction) << "\" cy=\""
          << y_of(point.f1) << "\" r=\"3.5\" fill=\"" << color << "\"/>\n";
    }
    double legend_y = kTop + 18.0 * static_cast<double>(s);
    svg << "<rect x=\"" << kRight + 14 << "\" y=\"" << legend_y - 9
        << "\" width=\"12\" height=\"12\" fill=\"" << color << "\"/>\n";
    svg << "<text x=\"" << kRight + 32 << "\" y=\"" << legend_y + 2
        << "\" font-size=\"12\">" << escape_xml(series[s].label) << "</text>\n";
  }

  svg << "</svg>\n";
  return svg.str();
}

std::string render_curves_text(const std::vector<CurveSeries>& series) {
  std::set<double> fractions;
  for (const auto& s : series) {
    for (const auto& point : s.points) fractions.insert(point.fraction);
  }

  std::vector<std::vector<std::string>> table;
  std::vector<std::string> header{"fraction"};
  for (const auto& s : series) header.push_back(s.label);
  table.push_back(std::move(header));

  for (double fraction : fractions) {
    std::vector<std::string> row{percent_label(fraction)};
    for (const auto& s : series) {
      std::string cell = "-";
      for (const auto& point : s.points) {
        if (point.fraction == fraction) {
          cell = format_fixed(round1(100.0 * point.f1), 1);
        }
      }
      row.push_back(std::move(cell));
    }
    table.push_back(std::move(row));
  }

  std::vector<std::size_t> widths(table[0].size(), 0);
  for (const auto& row : table) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  std::ostringstream out;
  for (const auto& row : table) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << row[c];
      if (c + 1 < row.size()) {
        for (std::size_t pad = row[c].size(); pad < widths[c] + 2; ++pad) {
          out << ' ';
        }
      }
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace okie

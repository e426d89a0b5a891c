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

#ifndef OKIE_PLOT_H_
#define OKIE_PLOT_H_

#include <string>
#include <vector>

namespace okie {

struct CurvePoint {
  double fraction = 0.0;  // training-data fraction in (0, 1]
  double f1 = 0.0;        // in [0, 1]
};

struct CurveSeries {
  std::string label;
  std::vector<CurvePoint> points;  // sorted by fraction
};

// F1 vs data-fraction curves as a standalone SVG document.
std::string render_curves_svg(const std::vector<CurveSeries>& series);

// Plain-text fallback: an aligned table, one row per fraction, one
// column per series.
std::string render_curves_text(const std::vector<CurveSeries>& series);

}  // namespace okie

#endif  // OKIE_PLOT_H_

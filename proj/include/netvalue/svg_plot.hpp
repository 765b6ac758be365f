#pragma once

#include <string>
#include <vector>

#include "netvalue/fitting.hpp"

namespace netvalue {

struct PlotSeries {
  std::string label;
  std::vector<XY> points;
  std::string color = "#1f77b4";
  bool draw_line = false;
  bool draw_points = true;
};

// Minimal self-contained scatter/line plot, linear axes. Data plots only;
// no styling knobs beyond per-series color.
std::string render_svg_plot(const std::string& title, const std::string& x_label,
                            const std::string& y_label,
                            const std::vector<PlotSeries>& series);

}  // namespace netvalue

#include "netvalue/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace netvalue {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kMarginLeft = 84.0;
constexpr double kMarginRight = 24.0;
constexpr double kMarginTop = 48.0;
constexpr double kMarginBottom = 64.0;

std::string num(double v) {
  char buffer[48];
  std::snprintf(buffer, sizeof(buffer), "%.6g", v);
  return buffer;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg_plot(const std::string& title, const std::string& x_label,
                            const std::string& y_label,
                            const std::vector<PlotSeries>& series) {
  double min_x = std::numeric_limits<double>::infinity();
  double max_x = -std::numeric_limits<double>::infinity();
  double min_y = min_x;
  double max_y = max_x;
  for (const PlotSeries& s : series) {
    for (const XY& p : s.points) {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
  }
  if (!std::isfinite(min_x) || !std::isfinite(min_y))
    throw std::invalid_argument("svg plot: no data points");
  if (max_x == min_x) {
    min_x -= 1.0;
    max_x += 1.0;
  }
  if (max_y == min_y) {
    min_y -= 1.0;
    max_y += 1.0;
  }

  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  const auto sx = [&](double x) {
    return kMarginLeft + (x - min_x) / (max_x - min_x) * plot_w;
  };
  const auto sy = [&](double y) {
    return kMarginTop + plot_h - (y - min_y) / (max_y - min_y) * plot_h;
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) +
         "\" height=\"" + num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " +
         num(kHeight) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + num(kWidth / 2) + "\" y=\"24\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"16\">" + escape(title) + "</text>\n";

  // Frame and ticks.
  svg += "<rect x=\"" + num(kMarginLeft) + "\" y=\"" + num(kMarginTop) + "\" width=\"" +
         num(plot_w) + "\" height=\"" + num(plot_h) +
         "\" fill=\"none\" stroke=\"#444\"/>\n";
  constexpr int kTicks = 5;
  for (int i = 0; i <= kTicks; ++i) {
    const double fx = min_x + (max_x - min_x) * i / kTicks;
    const double fy = min_y + (max_y - min_y) * i / kTicks;
    const double px = sx(fx);
    const double py = sy(fy);
    svg += "<line x1=\"" + num(px) + "\" y1=\"" + num(kMarginTop + plot_h) + "\" x2=\"" +
           num(px) + "\" y2=\"" + num(kMarginTop + plot_h + 6) + "\" stroke=\"#444\"/>\n";
    svg += "<text x=\"" + num(px) + "\" y=\"" + num(kMarginTop + plot_h + 22) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
           num(fx) + "</text>\n";
    svg += "<line x1=\"" + num(kMarginLeft - 6) + "\" y1=\"" + num(py) + "\" x2=\"" +
           num(kMarginLeft) + "\" y2=\"" + num(py) + "\" stroke=\"#444\"/>\n";
    svg += "<text x=\"" + num(kMarginLeft - 10) + "\" y=\"" + num(py + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
           num(fy) + "</text>\n";
  }
  svg += "<text x=\"" + num(kMarginLeft + plot_w / 2) + "\" y=\"" + num(kHeight - 16) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" +
         escape(x_label) + "</text>\n";
  svg += "<text x=\"20\" y=\"" + num(kMarginTop + plot_h / 2) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
         "transform=\"rotate(-90 20 " + num(kMarginTop + plot_h / 2) + ")\">" +
         escape(y_label) + "</text>\n";

  double legend_y = kMarginTop + 14.0;
  for (const PlotSeries& s : series) {
    if (s.draw_line && s.points.size() > 1) {
      std::string path = "<polyline fill=\"none\" stroke=\"" + s.color +
                         "\" stroke-width=\"1.5\" points=\"";
      for (const XY& p : s.points)
        path += num(sx(p.x)) + "," + num(sy(p.y)) + " ";
      path += "\"/>\n";
      svg += path;
    }
    if (s.draw_points) {
      for (const XY& p : s.points)
        svg += "<circle cx=\"" + num(sx(p.x)) + "\" cy=\"" + num(sy(p.y)) +
               "\" r=\"3\" fill=\"" + s.color + "\"/>\n";
    }
    svg += "<rect x=\"" + num(kMarginLeft + 10) + "\" y=\"" + num(legend_y - 9) +
           "\" width=\"12\" height=\"12\" fill=\"" + s.color + "\"/>\n";
    svg += "<text x=\"" + num(kMarginLeft + 28) + "\" y=\"" + num(legend_y + 2) +
           "\" font-family=\"sans-serif\" font-size=\"12\">" + escape(s.label) +
           "</text>\n";
    legend_y += 18.0;
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace netvalue

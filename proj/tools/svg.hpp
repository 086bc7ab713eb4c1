#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "isodiam/geometry.hpp"

namespace isodiam::cli {

/// Minimal SVG canvas mapping a world rectangle onto a fixed pixel frame
/// (y axis pointing up).
class SvgCanvas {
 public:
  SvgCanvas(double x_min, double x_max, double y_min, double y_max, double width = 800, double height = 600,
            double margin = 50);

  void rect(Point lower_left, double w, double h, std::string_view fill, double opacity = 1.0);
  void circle(Point center, double radius, std::string_view stroke, std::string_view fill = "none",
              double stroke_width = 1.5);
  void polyline(const std::vector<Point>& points, std::string_view stroke, double stroke_width = 2.0,
                std::string_view dash = "");
  void text(Point anchor, std::string_view label, double size = 12, std::string_view color = "#222");
  void axes(double x_tick, double y_tick);

  std::string str() const;

 private:
  double sx(double x) const;
  double sy(double y) const;
  double scale_x() const;
  double scale_y() const;

  double x_min_, x_max_, y_min_, y_max_;
  double width_, height_, margin_;
  std::ostringstream body_;
};

}  // namespace isodiam::cli

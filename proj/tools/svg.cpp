#include "svg.hpp"

#include <cmath>
#include <iomanip>

namespace isodiam::cli {

SvgCanvas::SvgCanvas(double x_min, double x_max, double y_min, double y_max, double width, double height,
                     double margin)
    : x_min_(x_min), x_max_(x_max), y_min_(y_min), y_max_(y_max), width_(width), height_(height), margin_(margin) {
  body_ << std::fixed << std::setprecision(3);
}

double SvgCanvas::scale_x() const { return (width_ - 2 * margin_) / (x_max_ - x_min_); }
double SvgCanvas::scale_y() const { return (height_ - 2 * margin_) / (y_max_ - y_min_); }
double SvgCanvas::sx(double x) const { return margin_ + (x - x_min_) * scale_x(); }
double SvgCanvas::sy(double y) const { return height_ - margin_ - (y - y_min_) * scale_y(); }

void SvgCanvas::rect(Point ll, double w, double h, std::string_view fill, double opacity) {
  body_ << "<rect x=\"" << sx(ll.x) << "\" y=\"" << sy(ll.y + h) << "\" width=\"" << w * scale_x()
        << "\" height=\"" << h * scale_y() << "\" fill=\"" << fill << "\" fill-opacity=\"" << opacity << "\"/>\n";
}

void SvgCanvas::circle(Point c, double radius, std::string_view stroke, std::string_view fill, double stroke_width) {
  // Uniform scale assumed for circles; ellipse otherwise.
  body_ << "<ellipse cx=\"" << sx(c.x) << "\" cy=\"" << sy(c.y) << "\" rx=\"" << radius * scale_x() << "\" ry=\""
        << radius * scale_y() << "\" stroke=\"" << stroke << "\" fill=\"" << fill << "\" stroke-width=\""
        << stroke_width << "\"/>\n";
}

void SvgCanvas::polyline(const std::vector<Point>& points, std::string_view stroke, double stroke_width,
                         std::string_view dash) {
  body_ << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << stroke_width << "\"";
  if (!dash.empty()) body_ << " stroke-dasharray=\"" << dash << "\"";
  body_ << " points=\"";
  for (const Point& p : points) body_ << sx(p.x) << ',' << sy(p.y) << ' ';
  body_ << "\"/>\n";
}

void SvgCanvas::text(Point anchor, std::string_view label, double size, std::string_view color) {
  body_ << "<text x=\"" << sx(anchor.x) << "\" y=\"" << sy(anchor.y) << "\" font-size=\"" << size
        << "\" font-family=\"sans-serif\" fill=\"" << color << "\">" << label << "</text>\n";
}

void SvgCanvas::axes(double x_tick, double y_tick) {
  polyline({{x_min_, y_min_}, {x_max_, y_min_}}, "#444", 1.0);
  polyline({{x_min_, y_min_}, {x_min_, y_max_}}, "#444", 1.0);
  std::ostringstream label;
  label << std::setprecision(3);
  for (double x = std::ceil(x_min_ / x_tick) * x_tick; x <= x_max_ + 1e-12; x += x_tick) {
    label.str("");
    label << x;
    text({x, y_min_}, label.str(), 10);
  }
  for (double y = std::ceil(y_min_ / y_tick) * y_tick; y <= y_max_ + 1e-12; y += y_tick) {
    label.str("");
    label << y;
    text({x_min_, y}, label.str(), 10);
  }
}

std::string SvgCanvas::str() const {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_ << "\" height=\"" << height_
      << "\" viewBox=\"0 0 " << width_ << ' ' << height_ << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << body_.str() << "</svg>\n";
  return out.str();
}

}  // namespace isodiam::cli

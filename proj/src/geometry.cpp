#include "isodiam/geometry.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include "isodiam/error.hpp"
#include "isodiam/random.hpp"

namespace isodiam {

namespace {

constexpr double kDegenerateRatio = 1e-12;
constexpr double kRightAngleCos = 1e-9;

double longest_side_squared(const Triangle& t) {
  return std::max({squared_distance(t.a, t.b), squared_distance(t.b, t.c), squared_distance(t.a, t.c)});
}

// Smallest disk through p, q and r on its boundary, falling back to the
// diametral disk of the farthest pair when the three are collinear.
Disk disk_from_three(Point p, Point q, Point r) {
  if (auto c = circumcircle({p, q, r})) return *c;
  const double pq = squared_distance(p, q);
  const double qr = squared_distance(q, r);
  const double pr = squared_distance(p, r);
  if (pq >= qr && pq >= pr) return diametral_disk(p, q);
  if (qr >= pr) return diametral_disk(q, r);
  return diametral_disk(p, r);
}

bool covers_all(const Disk& d, std::span<const Point> points) {
  return std::all_of(points.begin(), points.end(), [&](Point p) { return d.contains(p, 1e-9); });
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_real(std::string_view field, std::size_t line_no) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty()) {
    throw InputError("line " + std::to_string(line_no) + ": cannot parse '" + std::string(field) + "' as a real");
  }
  if (!std::isfinite(value)) {
    throw InputError("line " + std::to_string(line_no) + ": coordinate is not finite");
  }
  return value;
}

}  // namespace

bool Disk::contains(Point p, double rel_tol) const {
  return distance(center, p) <= radius + rel_tol * std::max(1.0, radius);
}

std::string_view to_string(TriangleKind kind) {
  switch (kind) {
    case TriangleKind::acute: return "acute";
    case TriangleKind::right: return "right";
    case TriangleKind::obtuse: return "obtuse";
    case TriangleKind::degenerate: return "degenerate";
  }
  return "unknown";
}

double triangle_area(Point a, Point b, Point c) { return 0.5 * std::abs(cross(a, b, c)); }

bool is_degenerate(const Triangle& t) {
  const double twice_area = std::abs(cross(t.a, t.b, t.c));
  return twice_area < kDegenerateRatio * longest_side_squared(t) || longest_side_squared(t) == 0.0;
}

std::optional<Disk> circumcircle(const Triangle& t) {
  if (is_degenerate(t)) return std::nullopt;
  const Point b = t.b - t.a;
  const Point c = t.c - t.a;
  const double d = 2.0 * (b.x * c.y - b.y * c.x);
  const double bb = b.x * b.x + b.y * b.y;
  const double cc = c.x * c.x + c.y * c.y;
  const Point u{(c.y * bb - b.y * cc) / d, (b.x * cc - c.x * bb) / d};
  return Disk{t.a + u, std::hypot(u.x, u.y)};
}

TriangleKind triangle_classify(const Triangle& t) {
  if (is_degenerate(t)) return TriangleKind::degenerate;
  double sides[3] = {distance(t.b, t.c), distance(t.a, t.c), distance(t.a, t.b)};
  std::sort(std::begin(sides), std::end(sides));
  const double cos_largest =
      (sides[0] * sides[0] + sides[1] * sides[1] - sides[2] * sides[2]) / (2.0 * sides[0] * sides[1]);
  if (std::abs(cos_largest) <= kRightAngleCos) return TriangleKind::right;
  return cos_largest < 0.0 ? TriangleKind::obtuse : TriangleKind::acute;
}

Disk diametral_disk(Point p, Point q) { return {0.5 * (p + q), 0.5 * distance(p, q)}; }

Disk min_enclosing_circle(std::span<const Point> points) {
  if (points.empty()) throw InputError("min_enclosing_circle: empty point set");

  std::vector<Point> pts(points.begin(), points.end());
  Rng rng(0x5EEDC1AC1Eull);
  for (std::size_t i = pts.size(); i > 1; --i) {
    std::swap(pts[i - 1], pts[rng.index(i)]);
  }

  Disk disk{pts[0], 0.0};
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (disk.contains(pts[i])) continue;
    disk = {pts[i], 0.0};
    for (std::size_t j = 0; j < i; ++j) {
      if (disk.contains(pts[j])) continue;
      disk = diametral_disk(pts[i], pts[j]);
      for (std::size_t k = 0; k < j; ++k) {
        if (disk.contains(pts[k])) continue;
        disk = disk_from_three(pts[i], pts[j], pts[k]);
      }
    }
  }
  return disk;
}

Disk min_enclosing_circle_brute_force(std::span<const Point> points) {
  if (points.empty()) throw InputError("min_enclosing_circle_brute_force: empty point set");
  const std::size_t n = points.size();
  Disk best{points[0], std::numeric_limits<double>::infinity()};
  if (n == 1) return {points[0], 0.0};
  auto consider = [&](const Disk& d) {
    if (d.radius < best.radius && covers_all(d, points)) best = d;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      consider(diametral_disk(points[i], points[j]));
      for (std::size_t k = j + 1; k < n; ++k) {
        if (auto c = circumcircle({points[i], points[j], points[k]})) consider(*c);
      }
    }
  }
  return best;
}

std::vector<std::size_t> convex_hull(std::span<const Point> points) {
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    const Point p = points[i];
    const Point q = points[j];
    return p.x < q.x || (p.x == q.x && (p.y < q.y || (p.y == q.y && i < j)));
  });
  order.erase(std::unique(order.begin(), order.end(),
                          [&](std::size_t i, std::size_t j) { return points[i] == points[j]; }),
              order.end());
  if (order.size() <= 2) return order;

  std::vector<std::size_t> hull(2 * order.size());
  std::size_t k = 0;
  for (std::size_t idx : order) {
    while (k >= 2 && cross(points[hull[k - 2]], points[hull[k - 1]], points[idx]) <= 0.0) --k;
    hull[k++] = idx;
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = order.size() - 1; i-- > 0;) {
    const std::size_t idx = order[i];
    while (k >= lower && cross(points[hull[k - 2]], points[hull[k - 1]], points[idx]) <= 0.0) --k;
    hull[k++] = idx;
  }
  hull.resize(k - 1);
  return hull;
}

PointSet parse_points_csv(std::istream& in) {
  PointSet points;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    const auto comma = view.find(',');
    if (comma == std::string_view::npos || view.find(',', comma + 1) != std::string_view::npos) {
      throw InputError("line " + std::to_string(line_no) + ": expected 'x,y'");
    }
    points.push_back({parse_real(view.substr(0, comma), line_no), parse_real(view.substr(comma + 1), line_no)});
  }
  return points;
}

PointSet read_points_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open point file '" + path + "'");
  return parse_points_csv(in);
}

std::string format_points_csv(std::span<const Point> points) {
  std::ostringstream out;
  out.precision(17);
  for (const Point& p : points) out << p.x << ',' << p.y << '\n';
  return out.str();
}

}  // namespace isodiam

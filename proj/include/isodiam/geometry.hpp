#pragma once

#include <cmath>
#include <cstddef>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace isodiam {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point operator+(Point p, Point q) { return {p.x + q.x, p.y + q.y}; }
  friend constexpr Point operator-(Point p, Point q) { return {p.x - q.x, p.y - q.y}; }
  friend constexpr Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
  friend constexpr bool operator==(Point, Point) = default;
};

/// Finite planar configuration; duplicates are kept as given.
using PointSet = std::vector<Point>;

struct Disk {
  Point center;
  double radius = 0.0;

  /// Closed containment with a relative tolerance of `rel_tol`.
  bool contains(Point p, double rel_tol = 1e-12) const;
};

struct Triangle {
  Point a;
  Point b;
  Point c;
};

enum class TriangleKind { acute, right, obtuse, degenerate };

std::string_view to_string(TriangleKind kind);

inline double squared_distance(Point p, Point q) {
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  return dx * dx + dy * dy;
}

inline double distance(Point p, Point q) { return std::hypot(p.x - q.x, p.y - q.y); }

/// Twice the signed area of (o, a, b); positive for a counter-clockwise turn.
inline double cross(Point o, Point a, Point b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double triangle_area(Point a, Point b, Point c);

/// True when twice the area is below 1e-12 times the squared longest side.
bool is_degenerate(const Triangle& t);

/// Circle through the three vertices, or nullopt for a degenerate triangle.
std::optional<Disk> circumcircle(const Triangle& t);

/// Classified by the largest angle; right when |cos| of it is within 1e-9.
TriangleKind triangle_classify(const Triangle& t);

/// Disk whose diameter is the segment pq.
Disk diametral_disk(Point p, Point q);

/// Smallest closed disk containing every point (randomized incremental
/// construction with a fixed internal shuffle, so the result is a pure
/// function of the input). Throws InputError on empty input.
Disk min_enclosing_circle(std::span<const Point> points);

/// O(n^4) reference: the smallest covering disk among all pair-diametral
/// circles and triple circumcircles.
Disk min_enclosing_circle_brute_force(std::span<const Point> points);

/// Convex hull vertex indices in counter-clockwise order, collinear points
/// dropped. A set with one distinct point yields one index; a collinear set
/// yields its two extreme points.
std::vector<std::size_t> convex_hull(std::span<const Point> points);

/// Parse the `x,y` CSV point format; `#` lines and blank lines are skipped.
PointSet parse_points_csv(std::istream& in);
PointSet read_points_csv(const std::string& path);
std::string format_points_csv(std::span<const Point> points);

}  // namespace isodiam

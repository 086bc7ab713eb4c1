#include <doctest.h>

#include <cmath>
#include <sstream>

#include "isodiam/error.hpp"
#include "isodiam/geometry.hpp"
#include "support.hpp"

using namespace isodiam;
using testing::Gen;

namespace {

const double kSqrt3 = std::sqrt(3.0);

Triangle equilateral(double side) { return {{0.0, 0.0}, {side, 0.0}, {side / 2.0, side * kSqrt3 / 2.0}}; }

// Smallest candidate circle (pair diameters and triple circumcircles) that
// covers every point, written without the library's helpers.
double oracle_mec_radius(const PointSet& s) {
  double best = INFINITY;
  auto covers = [&](Point c, double r) {
    for (Point p : s)
      if (testing::dist(c, p) > r * (1 + 1e-9) + 1e-12) return false;
    return true;
  };
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i; j < s.size(); ++j) {
      const Point c{(s[i].x + s[j].x) / 2, (s[i].y + s[j].y) / 2};
      const double r = testing::dist(s[i], s[j]) / 2;
      if (r < best && covers(c, r)) best = r;
      for (std::size_t k = j + 1; k < s.size(); ++k) {
        const double ax = s[i].x, ay = s[i].y, bx = s[j].x, by = s[j].y, cx = s[k].x, cy = s[k].y;
        const double d = 2 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
        if (std::abs(d) < 1e-14) continue;
        const double ux = ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay) +
                           (cx * cx + cy * cy) * (ay - by)) / d;
        const double uy = ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx) +
                           (cx * cx + cy * cy) * (bx - ax)) / d;
        const double rr = testing::dist({ux, uy}, s[i]);
        if (rr < best && covers({ux, uy}, rr)) best = rr;
      }
    }
  }
  return best;
}

}  // namespace

TEST_CASE("distance") {
  CHECK(distance({0, 0}, {0, 0}) == 0.0);
  CHECK(distance({0, 0}, {3, 4}) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(distance({1, 1}, {-1, -1}) == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("circumcircle") {
  SUBCASE("equilateral side 2") {
    auto d = circumcircle(equilateral(2.0));
    REQUIRE(d);
    CHECK(d->radius == doctest::Approx(2.0 / kSqrt3).epsilon(1e-12));
  }
  SUBCASE("isosceles 4,4,2") {
    const double apex = std::sqrt(16.0 - 1.0);
    auto d = circumcircle({{-1.0, 0.0}, {1.0, 0.0}, {0.0, apex}});
    REQUIRE(d);
    CHECK(d->radius == doctest::Approx(testing::circumradius_abc(4, 4, 2)).epsilon(1e-12));
    CHECK(d->radius == doctest::Approx(8.0 / std::sqrt(15.0)).epsilon(1e-12));
  }
  SUBCASE("collinear is degenerate") {
    CHECK_FALSE(circumcircle({{0, 0}, {1, 0}, {2, 0}}));
    CHECK(is_degenerate({{0, 0}, {1, 0}, {2, 0}}));
    CHECK(is_degenerate({{1, 1}, {1, 1}, {1, 1}}));
  }
}

TEST_CASE("circumcircle passes through all vertices") {
  Gen gen(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const Triangle t{{gen.real(-5, 5), gen.real(-5, 5)}, {gen.real(-5, 5), gen.real(-5, 5)},
                     {gen.real(-5, 5), gen.real(-5, 5)}};
    if (is_degenerate(t)) continue;
    auto d = circumcircle(t);
    REQUIRE(d);
    for (Point v : {t.a, t.b, t.c}) CHECK(distance(d->center, v) == doctest::Approx(d->radius).epsilon(1e-9));
  }
}

TEST_CASE("triangle_classify") {
  CHECK(triangle_classify({{0, 0}, {1, 0}, {0, 1}}) == TriangleKind::right);
  CHECK(triangle_classify(equilateral(1.0)) == TriangleKind::acute);
  CHECK(triangle_classify({{0, 0}, {4, 0}, {1, 0.1}}) == TriangleKind::obtuse);
  CHECK(triangle_classify({{0, 0}, {1, 0}, {3, 0}}) == TriangleKind::degenerate);
  CHECK(to_string(TriangleKind::obtuse) == "obtuse");
}

TEST_CASE("min_enclosing_circle examples") {
  const PointSet two{{0, 0}, {2, 0}};
  const Disk d = min_enclosing_circle(two);
  CHECK(d.center.x == doctest::Approx(1.0));
  CHECK(d.center.y == doctest::Approx(0.0));
  CHECK(d.radius == doctest::Approx(1.0));

  const Triangle t = equilateral(2.0);
  const PointSet tri{t.a, t.b, t.c};
  CHECK(min_enclosing_circle(tri).radius == doctest::Approx(2.0 / kSqrt3).epsilon(1e-12));

  CHECK(min_enclosing_circle(PointSet{{3, 4}}).radius == 0.0);
  CHECK_THROWS_AS(min_enclosing_circle(PointSet{}), InputError);
}

TEST_CASE("min_enclosing_circle agrees with the candidate-circle oracle") {
  Gen gen(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const PointSet s = gen.points(static_cast<std::size_t>(gen.integer(1, 9)), -3, 3);
    const double expected = oracle_mec_radius(s);
    CHECK(min_enclosing_circle(s).radius == doctest::Approx(expected).epsilon(1e-9));
    CHECK(min_enclosing_circle_brute_force(s).radius == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("min_enclosing_circle covers, respects Jung and the half-diameter floor") {
  Gen gen(99);
  for (int trial = 0; trial < 3000; ++trial) {
    PointSet s = gen.points(static_cast<std::size_t>(gen.integer(2, 40)), 0, 10);
    if (trial % 7 == 0) s.push_back(s.front());  // duplicates are kept
    const Disk d = min_enclosing_circle(s);
    const double dm = testing::brute_diam(s);
    for (Point p : s) CHECK(d.contains(p, 1e-9));
    CHECK(d.radius <= dm / kSqrt3 + 1e-9);
    CHECK(d.radius >= dm / 2.0 - 1e-12);
  }
}

TEST_CASE("non-acute triangles are enclosed by their longest side") {
  Gen gen(5);
  int checked = 0;
  while (checked < 500) {
    const Triangle t{{gen.real(0, 4), gen.real(0, 4)}, {gen.real(0, 4), gen.real(0, 4)},
                     {gen.real(0, 4), gen.real(0, 4)}};
    if (triangle_classify(t) == TriangleKind::acute) continue;
    ++checked;
    const double longest = std::max({distance(t.a, t.b), distance(t.b, t.c), distance(t.a, t.c)});
    const PointSet s{t.a, t.b, t.c};
    CHECK(min_enclosing_circle(s).radius == doctest::Approx(longest / 2.0).epsilon(1e-9));
  }
}

TEST_CASE("convex_hull") {
  const PointSet s{{0, 0}, {1, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}, {0, 0}};
  const auto hull = convex_hull(s);
  CHECK(hull.size() == 4);
  Gen gen(3);
  for (int trial = 0; trial < 200; ++trial) {
    const PointSet pts = gen.points(30, -1, 1);
    const auto h = convex_hull(pts);
    for (std::size_t i = 0; i < h.size(); ++i) {
      const Point a = pts[h[i]];
      const Point b = pts[h[(i + 1) % h.size()]];
      for (Point p : pts) CHECK(cross(a, b, p) >= -1e-12);
    }
  }
}

TEST_CASE("points CSV round trip and errors") {
  const PointSet s{{0.1, -2.5}, {1e-3, 7.0}, {0.1, -2.5}};
  std::istringstream in("# comment\n" + format_points_csv(s) + "\n");
  CHECK(parse_points_csv(in) == s);

  std::istringstream bad("1,2\n3;4\n");
  CHECK_THROWS_AS(parse_points_csv(bad), InputError);
  std::istringstream nan("1,nan\n");
  CHECK_THROWS_AS(parse_points_csv(nan), InputError);
  std::istringstream three("1,2,3\n");
  CHECK_THROWS_AS(parse_points_csv(three), InputError);
  CHECK_THROWS_AS(read_points_csv("/nonexistent/points.csv"), InputError);
}

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "isodiam/bounds.hpp"
#include "isodiam/error.hpp"
#include "isodiam/search.hpp"
#include "support.hpp"

using namespace isodiam;
using std::numbers::pi;
using testing::Gen;

namespace {

constexpr double kU3 = 5.054815608570830;

// Membership in conv(unit disk, (L,0), (-L,0)) through the tangent kites.
bool in_convex_candidate(Point p, double L) {
  if (p.x * p.x + p.y * p.y <= 1.0) return true;
  const double tx = 1.0 / L, ty = std::sqrt(1.0 - tx * tx);
  const double sx = p.x >= 0 ? 1.0 : -1.0;
  const Point a{sx * L, 0.0}, b{sx * tx, ty}, c{sx * tx, -ty};
  auto side = [](Point o, Point u, Point v) { return (u.x - o.x) * (v.y - o.y) - (u.y - o.y) * (v.x - o.x); };
  const double s1 = side(a, b, p), s2 = side(b, c, p), s3 = side(c, a, p);
  return (s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0);
}

SearchConfig small_config(std::uint64_t iterations, std::uint64_t seed = 42) {
  SearchConfig c;
  c.delta = 3.0;
  c.h = 0.1;
  c.iterations = iterations;
  c.seed = seed;
  return c;
}

}  // namespace

TEST_CASE("evaluate_candidates") {
  auto find = [](const std::vector<Candidate>& cs, const std::string& name) -> const Candidate* {
    for (const auto& c : cs)
      if (c.name == name) return &c;
    return nullptr;
  };
  const auto at2 = evaluate_candidates(2.0);
  REQUIRE(find(at2, "disk"));
  CHECK(find(at2, "disk")->measure == doctest::Approx(pi));
  CHECK(find(at2, "disk")->feasible);

  const auto at45 = evaluate_candidates(4.5);
  REQUIRE(find(at45, "two_disjoint_unit_disks"));
  CHECK(find(at45, "two_disjoint_unit_disks")->measure == doctest::Approx(2 * pi));
  CHECK_FALSE(find(at45, "disk")->feasible);

  const auto at3 = evaluate_candidates(3.0);
  REQUIRE(find(at3, "u_delta"));
  CHECK(find(at3, "u_delta")->measure == doctest::Approx(kU3).epsilon(1e-14));

  for (int k = 1; k <= 100; ++k) {
    const double d = kDiskRegimeLimit + (4.0 - kDiskRegimeLimit) * k / 101.0;
    CHECK(find(evaluate_candidates(d), "u_delta")->measure <= *bound_profile(d).stmt3);
  }
}

TEST_CASE("convex_candidate_measure") {
  CHECK(convex_candidate_measure(2.0) == doctest::Approx(pi).epsilon(1e-15));
  CHECK_THROWS_AS(convex_candidate_measure(1.5), InputError);
  for (double d = 2.0; d <= 6.0; d += 0.1) CHECK(convex_candidate_measure(d) <= raw::convex_improved(d));

  Gen gen(8);
  const double L = 1.5;
  const int n = 2'000'000;
  int hits = 0;
  for (int k = 0; k < n; ++k) hits += in_convex_candidate({gen.real(-L, L), gen.real(-1, 1)}, L);
  const double box = 2 * L * 2;
  const double p = static_cast<double>(hits) / n;
  CHECK(std::abs(box * p - convex_candidate_measure(3.0)) <= 3 * box * std::sqrt(p * (1 - p) / n));
}

TEST_CASE("anneal without iterations returns the rasterised U_delta") {
  const SearchResult r = anneal(small_config(0));
  CHECK(r.best_region == rasterize(u_delta_shape(3.0), 0.1));
  CHECK(r.best_measure == r.baseline_measure);
  CHECK(r.accepted_moves == 0);
  CHECK(r.u_delta_measure == doctest::Approx(kU3));
}

TEST_CASE("anneal is deterministic and brackets its measure") {
  SearchConfig c;
  c.delta = 3.0;
  c.h = 0.05;
  c.iterations = 100'000;
  c.seed = 42;
  const SearchResult a = anneal(c);
  const SearchResult b = anneal(c);
  CHECK(a.best_region == b.best_region);
  CHECK(a.accepted_moves == b.accepted_moves);
  CHECK(a.best_measure >= kU3 - 0.05);
  CHECK(a.best_measure <= raw::stmt3(3.0));
  CHECK(a.feasibility.feasible);
}

TEST_CASE("returned regions satisfy the constraints under an independent check") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    for (double delta : {2.5, 3.0, 3.7}) {
      SearchConfig c = small_config(20'000, seed);
      c.delta = delta;
      const SearchResult r = anneal(c);
      const PointSet centres = r.best_region.centers();
      const double tol = distance_slack(c.h);
      CHECK(testing::brute_diam(centres) <= delta + 1e-12);
      CHECK(testing::brute_diam(centres) >= delta - tol - 1e-12);
      Gen gen(seed * 7 + 1);
      for (int t = 0; t < 20'000; ++t) {
        const auto n = static_cast<int>(centres.size()) - 1;
        const Point p = centres[static_cast<std::size_t>(gen.integer(0, n))];
        const Point q = centres[static_cast<std::size_t>(gen.integer(0, n))];
        const Point s = centres[static_cast<std::size_t>(gen.integer(0, n))];
        const double m = std::min({testing::dist(p, q), testing::dist(q, s), testing::dist(p, s)});
        CHECK(m <= 2.0 + tol + 1e-12);
      }
      CHECK(r.feasibility.feasible);
    }
  }
}

TEST_CASE("best measure is non-decreasing in the iteration budget") {
  double prev = 0.0;
  for (std::uint64_t iters : {0u, 500u, 2000u, 10'000u, 30'000u}) {
    const double m = anneal(small_config(iters, 9)).best_measure;
    CHECK(m >= prev);
    prev = m;
  }
}

TEST_CASE("chains are independent of the thread count") {
  const SearchResult one = anneal_chains(small_config(5000), 4, 1);
  const SearchResult many = anneal_chains(small_config(5000), 4, 3);
  CHECK(one.seed == many.seed);
  CHECK(one.best_region == many.best_region);
  double best = 0.0;
  for (std::uint64_t k = 0; k < 4; ++k) best = std::max(best, anneal(small_config(5000, 42 + k)).best_measure);
  CHECK(one.best_measure == best);
}

TEST_CASE("anneal rejects bad configurations") {
  SearchConfig c = small_config(10);
  c.delta = 2.0;
  CHECK_THROWS_AS(anneal(c), InputError);
  c.delta = 4.0;
  CHECK_THROWS_AS(anneal(c), InputError);
  c = small_config(10);
  c.h = 0.0;
  CHECK_THROWS_AS(anneal(c), InputError);
  c = small_config(10);
  c.cooling = 1.0;
  CHECK_THROWS_AS(anneal(c), InputError);
  CHECK_THROWS_AS(anneal_chains(small_config(10), 0, 1), InputError);
}

TEST_CASE("check_feasibility flags an oversized region") {
  const PixelRegion disk = rasterize(DiskShape{{0, 0}, 2.0}, 0.1);
  const FeasibilityReport f = check_feasibility(disk, 3.0, distance_slack(0.1), 500, 1);
  CHECK_FALSE(f.feasible);
  CHECK(f.diam_centers > 3.0);
}

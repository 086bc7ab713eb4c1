#include <doctest.h>

#include <cmath>
#include <numbers>

#include "isodiam/error.hpp"
#include "isodiam/poisoning.hpp"
#include "support.hpp"

using namespace isodiam;
using std::numbers::pi;
using testing::Gen;

namespace {

PoisonStrategy masses(std::vector<PointMass> ms) { return {std::move(ms), std::nullopt}; }

PoisonConfig config_for(const PoisonStrategy& s, double R, std::uint64_t samples = 200'000) {
  PoisonConfig c;
  c.R = R;
  c.h_available = s.total_grams();
  c.samples = samples;
  return c;
}

// Random masses summing to `grams`, all within D(O, R - 1).
PoisonStrategy random_strategy(Gen& gen, double grams, double R) {
  const int k = gen.integer(1, 6);
  std::vector<double> w(static_cast<std::size_t>(k));
  double total = 0.0;
  for (double& x : w) total += (x = gen.real(0.05, 1.0));
  PoisonStrategy s;
  for (double x : w) {
    double px, py;
    do {
      px = gen.real(-(R - 1), R - 1);
      py = gen.real(-(R - 1), R - 1);
    } while (px * px + py * py > (R - 1) * (R - 1));
    s.masses.push_back({{px, py}, grams * x / total});
  }
  return s;
}

bool within_ci(const KillReport& k, double exact) {
  const double se = std::sqrt(exact * (1 - exact) / static_cast<double>(k.samples));
  return std::abs(k.estimate - exact) <= 3 * se;
}

}  // namespace

TEST_CASE("is_lethal examples") {
  const PoisonStrategy centre = masses({{{0, 0}, 1.0}});
  CHECK(is_lethal(centre, {0, 0}));
  CHECK_FALSE(is_lethal(centre, {1.5, 0}));
  CHECK(is_lethal(centre, {1.0, 0}));  // closed bite
  const PoisonStrategy split = masses({{{-0.9, 0}, 0.5}, {{0.9, 0}, 0.5}});
  CHECK(is_lethal(split, {0, 0}));
  CHECK(poison_in_bite(split, {0, 0}) == doctest::Approx(1.0));
  const PoisonStrategy thirds = masses({{{0, 0}, 0.1}, {{0, 0.5}, 0.2}, {{0.5, 0}, 0.7}});
  CHECK(is_lethal(thirds, {0.2, 0.2}));
}

TEST_CASE("poison_in_bite matches a direct sum") {
  Gen gen(4);
  for (int trial = 0; trial < 200; ++trial) {
    const PoisonStrategy s = random_strategy(gen, 1.5, 3.0);
    const Point p{gen.real(-2, 2), gen.real(-2, 2)};
    double expected = 0.0;
    for (const PointMass& m : s.masses)
      if (testing::dist(m.position, p) <= 1.0) expected += m.grams;
    CHECK(poison_in_bite(s, p) == doctest::Approx(expected).epsilon(1e-14));
  }
}

TEST_CASE("kill probability of the central mass is 1/(R-1)^2") {
  const PoisonStrategy centre = masses({{{0, 0}, 1.0}});
  for (double R : {2.5, 3.0, 4.0, 6.0}) {
    const KillReport k = kill_probability(centre, config_for(centre, R));
    CHECK(within_ci(k, 1.0 / ((R - 1) * (R - 1))));
    CHECK(k.ci_low <= k.estimate);
    CHECK(k.estimate <= k.ci_high);
    CHECK(k.samples == 200'000);
  }
}

TEST_CASE("two disjoint lethal disks") {
  const PoisonStrategy pair = masses({{{-1.5, 0}, 1.0}, {{1.5, 0}, 1.0}});
  CHECK(within_ci(kill_probability(pair, config_for(pair, 4.0)), 2.0 / 9.0));
  const PoisonStrategy wasted = masses({{{-1.2, 0}, 0.5}, {{1.2, 0}, 0.5}});
  CHECK(kill_probability(wasted, config_for(wasted, 3.0)).hits == 0);
}

TEST_CASE("results do not depend on the thread count") {
  const PoisonStrategy s = masses({{{0.3, 0.1}, 0.6}, {{-0.2, 0.4}, 0.4}});
  PoisonConfig c = config_for(s, 3.0, 300'001);
  const KillReport one = kill_probability(s, c);
  c.threads = 4;
  const KillReport four = kill_probability(s, c);
  CHECK(one.hits == four.hits);
  CHECK(one.estimate == four.estimate);
}

TEST_CASE("adding poison never lowers lethality") {
  Gen gen(9);
  for (int trial = 0; trial < 30; ++trial) {
    PoisonStrategy s = random_strategy(gen, 1.2, 3.0);
    const KillReport before = kill_probability(s, config_for(s, 3.0, 50'000));
    PoisonStrategy more = s;
    more.masses.push_back({{gen.real(-1, 1), gen.real(-1, 1)}, gen.real(0.01, 0.5)});
    const KillReport after = kill_probability(more, config_for(more, 3.0, 50'000));
    CHECK(after.hits >= before.hits);
    for (int k = 0; k < 200; ++k) {
      const Point p{gen.real(-2, 2), gen.real(-2, 2)};
      if (is_lethal(s, p)) CHECK(is_lethal(more, p));
    }
  }
}

TEST_CASE("lethal regions") {
  const PoisonStrategy centre = masses({{{0, 0}, 1.0}});
  const double h = 0.02;
  const PixelRegion r = lethal_region(centre, config_for(centre, 3.0), h);
  CHECK(region_measure(r) == doctest::Approx(pi).epsilon(0.02));

  Gen gen(77);
  for (int trial = 0; trial < 50; ++trial) {
    const PoisonStrategy s = random_strategy(gen, gen.real(1.0, 1.99), 3.0);
    const PixelRegion lr = lethal_region(s, config_for(s, 3.0), 0.05);
    if (!lr.empty()) CHECK(region_diam(lr) <= 2.0 + distance_slack(0.05));
  }
  for (int trial = 0; trial < 20; ++trial) {
    const PoisonStrategy s = random_strategy(gen, gen.real(2.0, 2.99), 4.0);
    const PixelRegion lr = lethal_region(s, config_for(s, 4.0), 0.05);
    if (lr.size() >= 3) CHECK_FALSE(region_ta2_violation(lr, 3, 2.0 + distance_slack(0.05), 1000, 3));
  }
}

TEST_CASE("density strategies") {
  PoisonStrategy s;
  s.density = DensityPart{rasterize(DiskShape{{0, 0}, 0.3}, 0.05), 1.0};
  CHECK(s.total_grams() == 1.0);
  CHECK(poison_in_bite(s, {0, 0}) == doctest::Approx(1.0));
  CHECK(poison_in_bite(s, {2.0, 0}) == 0.0);
  CHECK(poison_in_bite(s, {1.0, 0}) < 1.0);
  const PixelRegion lr = lethal_region(s, config_for(s, 3.0), 0.05);
  CHECK(region_diam(lr) <= 2.0 * 0.7 + 2 * distance_slack(0.05));
}

TEST_CASE("validation") {
  const PoisonStrategy centre = masses({{{0, 0}, 1.0}});
  PoisonConfig c = config_for(centre, 3.0);
  c.R = 2.0;
  CHECK_THROWS_AS(kill_probability(centre, c), InputError);
  c = config_for(centre, 3.0);
  c.h_available = 2.0;
  CHECK_THROWS_AS(kill_probability(centre, c), InputError);
  c = config_for(centre, 3.0);
  c.lethal_dose = 1.5;
  CHECK_THROWS_AS(kill_probability(centre, c), InputError);
  const PoisonStrategy outside = masses({{{5, 0}, 1.0}});
  CHECK_THROWS_AS(kill_probability(outside, config_for(outside, 3.0)), InputError);
  const PoisonStrategy negative = masses({{{0, 0}, 1.5}, {{0, 0}, -0.5}});
  CHECK_THROWS_AS(kill_probability(negative, config_for(negative, 3.0)), InputError);
  c = config_for(centre, 3.0);
  c.samples = 0;
  CHECK_THROWS_AS(kill_probability(centre, c), InputError);
  CHECK_THROWS_AS(lethal_region(centre, config_for(centre, 3.0), 0.0), InputError);
}

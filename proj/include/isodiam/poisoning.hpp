#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "isodiam/geometry.hpp"
#include "isodiam/regions.hpp"

namespace isodiam {

struct PointMass {
  Point position;
  double grams = 0.0;
};

/// Poison spread uniformly over the cells of a pixel region.
struct DensityPart {
  PixelRegion region;
  double grams = 0.0;
};

struct PoisonStrategy {
  std::vector<PointMass> masses;
  std::optional<DensityPart> density;

  double total_grams() const;
};

struct PoisonConfig {
  double R = 3.0;            // pie radius, > 2
  double h_available = 1.0;  // grams of poison, >= lethal_dose
  double lethal_dose = 1.0;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 42;
  unsigned threads = 1;
};

struct KillReport {
  double estimate = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
};

/// Throws InputError unless R > 2, h_available >= lethal_dose > 0, every
/// mass is positive and inside the pie, and the strategy's grams total
/// h_available (relative tolerance 1e-9).
void validate(const PoisonStrategy& strategy, const PoisonConfig& config);

/// Grams inside the closed unit disk D(p, 1); density cells count when
/// their centre is inside.
double poison_in_bite(const PoisonStrategy& strategy, Point p);

/// True when the bite D(p, 1) holds at least `lethal_dose` grams.
bool is_lethal(const PoisonStrategy& strategy, Point p, double lethal_dose = 1.0);

/// Monte Carlo estimate of the probability that a bite centred uniformly in
/// D(O, R - 1) is lethal, with a normal-approximation 95% interval. Samples
/// are drawn in fixed-size batches with per-batch seed streams, so the result
/// does not depend on the thread count.
KillReport kill_probability(const PoisonStrategy& strategy, const PoisonConfig& config);

/// Lattice cells (pitch h_grid, anchored at the origin) whose centres lie in
/// D(O, R - 1) and are centres of lethal bites.
PixelRegion lethal_region(const PoisonStrategy& strategy, const PoisonConfig& config, double h_grid);

}  // namespace isodiam

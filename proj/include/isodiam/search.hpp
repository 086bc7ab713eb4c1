#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "isodiam/regions.hpp"

namespace isodiam {

struct Candidate {
  std::string name;
  double measure = 0.0;
  bool feasible = false;
};

/// Extremal-set candidates at diameter `delta` with their analytic measure:
/// the disk of diameter delta, U_delta (2 < delta < 4) and two disjoint unit
/// disks (delta >= 4).
std::vector<Candidate> evaluate_candidates(double delta);

/// Area of the convex hull of a segment of length `delta` and the unit disk
/// centred at its midpoint. Throws InputError for delta < 2.
double convex_candidate_measure(double delta);

struct SearchConfig {
  double delta = 3.0;
  double h = 0.05;
  std::uint64_t iterations = 100'000;
  double temperature_init = 0.0;  // 0 selects 0.1 h^2
  double cooling = 0.9995;
  std::uint64_t seed = 42;
  double diam_tolerance = 0.0;  // 0 selects 2 h sqrt(2)
  std::size_t triple_samples = 2000;
};

struct FeasibilityReport {
  double diam_centers = 0.0;  // constrained to [delta - tol, delta]
  double diam_lower = 0.0;
  double diam_upper = 0.0;
  double region_diam = 0.0;    // corner-exact diameter of the cell union
  double diam3_centers = 0.0;  // exact over all cell centres
  double diam3_sampled = 0.0;  // fresh-seed sampled lower bound
  double diam3_threshold = 0.0;
  bool feasible = false;
};

struct SearchResult {
  PixelRegion best_region{{0.0, 0.0}, 1.0};
  double best_measure = 0.0;
  double baseline_measure = 0.0;  // rasterised U_delta (the seed)
  double u_delta_measure = 0.0;   // analytic
  double bound_value = 0.0;       // min{stmt3, 2 pi} at delta
  double improvement = 0.0;       // best - baseline
  double slack_measure = 0.0;     // perimeter(U_delta) * distance slack
  bool exceeds_slack = false;     // improvement beyond discretisation slack
  std::uint64_t seed = 0;
  std::uint64_t iterations = 0;
  std::uint64_t accepted_moves = 0;
  FeasibilityReport feasibility;
};

/// Simulated annealing over pixel regions of diameter delta whose cell
/// centres form a T(3,2)-set up to the slack 2 h sqrt(2). Seeded at the
/// rasterised U_delta; moves add or remove one boundary cell. Throws
/// InputError for an invalid config and InfeasibleError when the seed region
/// violates the constraints (h too coarse for delta).
SearchResult anneal(const SearchConfig& config);

/// Independent chains with seeds seed, seed+1, ...; the best measure wins,
/// ties go to the smaller seed. Runs up to `threads` chains concurrently.
SearchResult anneal_chains(const SearchConfig& config, unsigned chains, unsigned threads = 1);

/// Re-validates a region against the search constraints.
FeasibilityReport check_feasibility(const PixelRegion& region, double delta, double diam_tolerance,
                                    std::size_t triple_samples, std::uint64_t sample_seed);

}  // namespace isodiam

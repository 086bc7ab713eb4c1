#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "isodiam/geometry.hpp"

namespace isodiam {

/// Default cap on the number of a-subsets an exact enumeration may visit.
inline constexpr std::uint64_t kDefaultSubsetBudget = 50'000'000;

struct AbEntry {
  int a = 0;
  int b = 0;
  double value = 0.0;
};

struct DiameterReport {
  double diam = 0.0;
  double diam3 = 0.0;
  double triameter = 0.0;
  std::vector<AbEntry> ab_entries;
};

/// Number of k-subsets of an n-set, saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Indices of a pair realising the diameter. Requires a nonempty set.
std::pair<std::size_t, std::size_t> diameter_pair(std::span<const Point> points);

/// Largest pairwise distance; 0 for a singleton. Throws InputError when empty.
double diam(std::span<const Point> points);

/// Largest, over all 3-subsets, of the smallest pairwise distance in the
/// subset. 0 when fewer than three points are given.
double diam3(std::span<const Point> points);

/// (a,b)-diameter: the sup over a-subsets F of the min over b-subsets of F of
/// the largest pairwise distance. 0 when fewer than a points are given.
/// Throws InputError unless a > b >= 2 and BudgetError when C(n, a) > budget.
double diam_ab(std::span<const Point> points, int a, int b, std::uint64_t budget = kDefaultSubsetBudget);

/// Largest triangle area over all 3-subsets; 0 when fewer than three points.
double triameter(std::span<const Point> points);

struct TabResult {
  bool holds = true;
  /// Lexicographically first violating a-subset (indices), empty when holds.
  std::vector<std::size_t> witness;
};

/// Checks the T(a,b) property with a closed distance threshold: every a-subset
/// must contain b points whose pairwise distances are all <= threshold.
TabResult tab_check(std::span<const Point> points, int a, int b, double threshold,
                    std::uint64_t budget = kDefaultSubsetBudget);

/// Lexicographically first k-subset whose pairwise distances all exceed
/// `threshold`, found by branch-and-bound clique search on the "far" graph.
/// No budget: the search is exact but prunes with a greedy colouring bound.
std::optional<std::vector<std::size_t>> find_far_subset(std::span<const Point> points, std::size_t k,
                                                        double threshold);

DiameterReport diameter_report(std::span<const Point> points, std::span<const std::pair<int, int>> ab_pairs,
                               std::uint64_t budget = kDefaultSubsetBudget);

}  // namespace isodiam

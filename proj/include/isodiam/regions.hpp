#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "isodiam/diameters.hpp"
#include "isodiam/geometry.hpp"

namespace isodiam {

/// Integer grid index; cell (i, j) covers
/// [origin + (i h, j h), origin + ((i+1) h, (j+1) h)].
struct Cell {
  std::int64_t i = 0;
  std::int64_t j = 0;

  friend bool operator==(Cell, Cell) = default;
  // Row-major: by j, then i.
  friend std::strong_ordering operator<=>(Cell a, Cell b) {
    if (auto c = a.j <=> b.j; c != 0) return c;
    return a.i <=> b.i;
  }
};

/// Finite union of grid cells; the cell list is kept sorted and unique.
class PixelRegion {
 public:
  PixelRegion(Point origin, double h, std::vector<Cell> cells = {});

  Point origin() const { return origin_; }
  double h() const { return h_; }
  std::span<const Cell> cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  bool contains(Cell c) const;

  Point center(Cell c) const { return {origin_.x + (c.i + 0.5) * h_, origin_.y + (c.j + 0.5) * h_}; }
  PointSet centers() const;

  friend bool operator==(const PixelRegion&, const PixelRegion&) = default;

 private:
  Point origin_;
  double h_;
  std::vector<Cell> cells_;
};

struct DiskShape {
  Point center;
  double radius = 1.0;
};

/// Two unit disks centred at (-d/2, 0) and (d/2, 0).
struct TwoDisksShape {
  double d = 0.0;
};

/// k unit disks on the x-axis, consecutive centres `spacing` > 4 apart,
/// centred on the origin.
struct DisjointDisksShape {
  int k = 1;
  double spacing = 5.0;
};

struct DiskUnionShape {
  std::vector<Disk> disks;
};

using AnalyticShape = std::variant<DiskShape, TwoDisksShape, DisjointDisksShape, DiskUnionShape>;

/// The disks whose union is `shape`; validates the variant's invariants.
std::vector<Disk> shape_disks(const AnalyticShape& shape);

/// Cells of the lattice anchored at the origin whose centres lie in the shape.
PixelRegion rasterize(const AnalyticShape& shape, double h);

/// Area of the intersection of two unit disks at centre distance d in [0, 2].
double lens_area(double d);

/// Union of two unit disks of diameter delta in (2, 4).
TwoDisksShape u_delta_shape(double delta);

/// 2 pi - lens_area(delta - 2).
double u_delta_measure(double delta);

double region_measure(const PixelRegion& region);

/// Exact diameter of the union of cells (farthest pair of cell corners).
double region_diam(const PixelRegion& region);

/// Length of the cell edges separating the region from its complement.
double region_boundary_length(const PixelRegion& region);

/// `k` seeded-uniform cell centres (with replacement) plus every cell centre
/// that is a convex-hull vertex of the centre set.
PointSet region_sample_points(const PixelRegion& region, std::size_t k, std::uint64_t seed);

/// diam3 of region_sample_points: a lower bound on the diam3 of the centres.
double region_diam3_sampled(const PixelRegion& region, std::size_t k, std::uint64_t seed);

/// Sampled T(a,2) test: looks for `a` sampled points pairwise farther apart
/// than `threshold`. Returns the violating points, or nullopt when it passes.
std::optional<PointSet> region_ta2_violation(const PixelRegion& region, int a, double threshold, std::size_t k,
                                             std::uint64_t seed);

/// Discretisation slack 2 h sqrt(2) applied to the distance-2 threshold.
double distance_slack(double h);

/// Index difference set {c1 - c2}; the result's cell (i, j) is centred at
/// (i h, j h), so the region is symmetric under index negation.
PixelRegion minkowski_difference(const PixelRegion& region);

/// Half-open angular interval [start, end) in radians.
struct Arc {
  double start = 0.0;
  double end = 0.0;
  friend bool operator==(Arc, Arc) = default;
};

/// Finite union of disjoint arcs on the circle of radius r. Input arcs may
/// start anywhere; they are normalised into [0, 2 pi) and arcs crossing 0
/// are split there.
class ArcSet {
 public:
  ArcSet(double r, std::vector<Arc> arcs);

  double r() const { return r_; }
  std::span<const Arc> arcs() const { return arcs_; }
  double angular_measure() const;

 private:
  double r_;
  std::vector<Arc> arcs_;
};

/// One-dimensional measure r * (sum of widths).
double arc_measure(const ArcSet& arcs);

/// Chord between angles t and u on a circle of radius r.
double chord(double r, double t, double u);

struct ArcCheck {
  bool holds = true;
  std::array<double, 3> witness{};  // angles in [0, 2 pi), valid when !holds
};

/// Exact T(3,2) test of an arc set (threshold 2): decides whether three
/// points of the set are pairwise more than 2 apart. Requires r > 2/sqrt(3).
ArcCheck arc_tab_check(const ArcSet& arcs);

}  // namespace isodiam

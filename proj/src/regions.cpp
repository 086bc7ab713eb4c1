#include "isodiam/regions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <string>

#include "isodiam/bounds.hpp"
#include "isodiam/error.hpp"
#include "isodiam/random.hpp"

namespace isodiam {

namespace {

struct Run {
  std::int64_t lo;  // inclusive
  std::int64_t hi;  // inclusive
};

// Rows of consecutive cells, keyed by j. Relies on row-major cell order.
std::vector<std::pair<std::int64_t, std::vector<Run>>> row_runs(std::span<const Cell> cells) {
  std::vector<std::pair<std::int64_t, std::vector<Run>>> rows;
  for (const Cell& c : cells) {
    if (rows.empty() || rows.back().first != c.j) rows.push_back({c.j, {}});
    auto& runs = rows.back().second;
    if (!runs.empty() && runs.back().hi + 1 == c.i) {
      runs.back().hi = c.i;
    } else {
      runs.push_back({c.i, c.i});
    }
  }
  return rows;
}

// Leftmost and rightmost cell of every row; every hull vertex of the cell
// centres or corners comes from one of these.
std::vector<Cell> row_extremes(std::span<const Cell> cells) {
  std::vector<Cell> out;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const bool first = k == 0 || cells[k - 1].j != cells[k].j;
    const bool last = k + 1 == cells.size() || cells[k + 1].j != cells[k].j;
    if (first || last) out.push_back(cells[k]);
  }
  return out;
}

void require_nonempty(const PixelRegion& region, const char* what) {
  if (region.empty()) throw InputError(std::string(what) + ": empty region");
}

}  // namespace

PixelRegion::PixelRegion(Point origin, double h, std::vector<Cell> cells)
    : origin_(origin), h_(h), cells_(std::move(cells)) {
  if (!(h > 0.0) || !std::isfinite(h)) throw InputError("pixel size h must be positive and finite");
  if (!std::isfinite(origin.x) || !std::isfinite(origin.y)) throw InputError("region origin must be finite");
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

bool PixelRegion::contains(Cell c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }

PointSet PixelRegion::centers() const {
  PointSet out;
  out.reserve(cells_.size());
  for (const Cell& c : cells_) out.push_back(center(c));
  return out;
}

std::vector<Disk> shape_disks(const AnalyticShape& shape) {
  struct Visitor {
    std::vector<Disk> operator()(const DiskShape& s) const {
      if (!(s.radius >= 0.0)) throw InputError("disk radius must be nonnegative");
      return {{s.center, s.radius}};
    }
    std::vector<Disk> operator()(const TwoDisksShape& s) const {
      if (!(s.d >= 0.0)) throw InputError("two-disk centre distance must be nonnegative");
      return {{{-0.5 * s.d, 0.0}, 1.0}, {{0.5 * s.d, 0.0}, 1.0}};
    }
    std::vector<Disk> operator()(const DisjointDisksShape& s) const {
      if (s.k < 1) throw InputError("disjoint disks: need k >= 1");
      if (!(s.spacing > 4.0)) throw InputError("disjoint disks: spacing must exceed 4");
      std::vector<Disk> out;
      const double first = -0.5 * (s.k - 1) * s.spacing;
      for (int i = 0; i < s.k; ++i) out.push_back({{first + i * s.spacing, 0.0}, 1.0});
      return out;
    }
    std::vector<Disk> operator()(const DiskUnionShape& s) const {
      for (const Disk& d : s.disks) {
        if (!(d.radius >= 0.0)) throw InputError("disk radius must be nonnegative");
      }
      return s.disks;
    }
  };
  return std::visit(Visitor{}, shape);
}

PixelRegion rasterize(const AnalyticShape& shape, double h) {
  if (!(h > 0.0)) throw InputError("rasterize: h must be positive");
  std::vector<Cell> cells;
  for (const Disk& disk : shape_disks(shape)) {
    if (disk.radius <= 0.0) continue;
    const double r = disk.radius;
    const auto j_lo = static_cast<std::int64_t>(std::ceil((disk.center.y - r) / h - 0.5));
    const auto j_hi = static_cast<std::int64_t>(std::floor((disk.center.y + r) / h - 0.5));
    for (std::int64_t j = j_lo; j <= j_hi; ++j) {
      const double dy = (j + 0.5) * h - disk.center.y;
      const double w2 = r * r - dy * dy;
      if (w2 < 0.0) continue;
      const double w = std::sqrt(w2);
      const auto i_lo = static_cast<std::int64_t>(std::ceil((disk.center.x - w) / h - 0.5));
      const auto i_hi = static_cast<std::int64_t>(std::floor((disk.center.x + w) / h - 0.5));
      for (std::int64_t i = i_lo; i <= i_hi; ++i) cells.push_back({i, j});
    }
  }
  return PixelRegion({0.0, 0.0}, h, std::move(cells));
}

double lens_area(double d) {
  if (!(d >= 0.0 && d <= 2.0)) throw InputError("lens_area: centre distance must lie in [0, 2]");
  const double half = 0.5 * d;
  return 2.0 * std::acos(half) - half * std::sqrt(4.0 - d * d);
}

TwoDisksShape u_delta_shape(double delta) {
  if (!(delta > 2.0 && delta < 4.0)) throw InputError("U_delta requires 2 < delta < 4");
  return {delta - 2.0};
}

double u_delta_measure(double delta) { return kTwoPi - lens_area(u_delta_shape(delta).d); }

double region_measure(const PixelRegion& region) {
  return static_cast<double>(region.size()) * region.h() * region.h();
}

double region_diam(const PixelRegion& region) {
  require_nonempty(region, "region_diam");
  const double h = region.h();
  PointSet corners;
  for (const Cell& c : row_extremes(region.cells())) {
    const Point ll{region.origin().x + c.i * h, region.origin().y + c.j * h};
    corners.push_back(ll);
    corners.push_back({ll.x + h, ll.y});
    corners.push_back({ll.x, ll.y + h});
    corners.push_back({ll.x + h, ll.y + h});
  }
  return diam(corners);
}

double region_boundary_length(const PixelRegion& region) {
  std::size_t edges = 0;
  for (const Cell& c : region.cells()) {
    edges += !region.contains({c.i + 1, c.j});
    edges += !region.contains({c.i - 1, c.j});
    edges += !region.contains({c.i, c.j + 1});
    edges += !region.contains({c.i, c.j - 1});
  }
  return static_cast<double>(edges) * region.h();
}

PointSet region_sample_points(const PixelRegion& region, std::size_t k, std::uint64_t seed) {
  require_nonempty(region, "region_sample_points");
  PointSet points;
  Rng rng(seed);
  const auto cells = region.cells();
  for (std::size_t s = 0; s < k; ++s) points.push_back(region.center(cells[rng.index(cells.size())]));
  PointSet extreme;
  for (const Cell& c : row_extremes(cells)) extreme.push_back(region.center(c));
  for (std::size_t idx : convex_hull(extreme)) points.push_back(extreme[idx]);
  return points;
}

double region_diam3_sampled(const PixelRegion& region, std::size_t k, std::uint64_t seed) {
  return diam3(region_sample_points(region, k, seed));
}

std::optional<PointSet> region_ta2_violation(const PixelRegion& region, int a, double threshold, std::size_t k,
                                             std::uint64_t seed) {
  if (a < 3) throw InputError("T(a,2) check needs a >= 3");
  const PointSet sample = region_sample_points(region, k, seed);
  const auto far = find_far_subset(sample, static_cast<std::size_t>(a), threshold);
  if (!far) return std::nullopt;
  PointSet witness;
  for (std::size_t idx : *far) witness.push_back(sample[idx]);
  return witness;
}

double distance_slack(double h) { return 2.0 * h * std::numbers::sqrt2; }

PixelRegion minkowski_difference(const PixelRegion& region) {
  const double h = region.h();
  const auto rows = row_runs(region.cells());
  std::map<std::int64_t, std::vector<Run>> diff;
  for (const auto& [ja, runs_a] : rows) {
    for (const auto& [jb, runs_b] : rows) {
      auto& out = diff[ja - jb];
      for (const Run& ra : runs_a) {
        for (const Run& rb : runs_b) out.push_back({ra.lo - rb.hi, ra.hi - rb.lo});
      }
    }
  }
  std::vector<Cell> cells;
  for (auto& [dj, runs] : diff) {
    std::sort(runs.begin(), runs.end(), [](const Run& x, const Run& y) { return x.lo < y.lo; });
    std::int64_t next = std::numeric_limits<std::int64_t>::min();
    for (const Run& run : runs) {
      for (std::int64_t i = std::max(run.lo, next); i <= run.hi; ++i) cells.push_back({i, dj});
      next = std::max(next, run.hi + 1);
    }
  }
  return PixelRegion({-0.5 * h, -0.5 * h}, h, std::move(cells));
}

ArcSet::ArcSet(double r, std::vector<Arc> arcs) : r_(r) {
  if (!(r > 0.0) || !std::isfinite(r)) throw InputError("arc set radius must be positive");
  for (const Arc& arc : arcs) {
    if (!std::isfinite(arc.start) || !std::isfinite(arc.end) || !(arc.end > arc.start)) {
      throw InputError("malformed arc: need finite start < end");
    }
    const double width = arc.end - arc.start;
    if (width > kTwoPi) throw InputError("malformed arc: wider than the full circle");
    double start = std::fmod(arc.start, kTwoPi);
    if (start < 0.0) start += kTwoPi;
    if (start >= kTwoPi) start = 0.0;
    const double end = start + width;
    if (end > kTwoPi) {
      arcs_.push_back({start, kTwoPi});
      arcs_.push_back({0.0, end - kTwoPi});
    } else {
      arcs_.push_back({start, end});
    }
  }
  std::sort(arcs_.begin(), arcs_.end(), [](const Arc& x, const Arc& y) { return x.start < y.start; });
  for (std::size_t i = 1; i < arcs_.size(); ++i) {
    if (arcs_[i].start < arcs_[i - 1].end) throw InputError("malformed arc set: arcs overlap");
  }
}

double ArcSet::angular_measure() const {
  double total = 0.0;
  for (const Arc& arc : arcs_) total += arc.end - arc.start;
  return total;
}

double arc_measure(const ArcSet& arcs) { return arcs.r() * arcs.angular_measure(); }

double chord(double r, double t, double u) { return 2.0 * r * std::abs(std::sin(0.5 * (t - u))); }

ArcCheck arc_tab_check(const ArcSet& set) {
  const double r = set.r();
  if (r <= kDiskRegimeLimit / 2.0) throw InputError("arc_tab_check: radius must exceed 2/sqrt(3)");
  const auto base = set.arcs();
  if (base.empty()) return {};

  // Chord > 2 iff the angular separation exceeds alpha. Three points are
  // pairwise far iff all three circular gaps between them exceed alpha.
  const double alpha = 2.0 * std::asin(1.0 / r);

  std::vector<Arc> unwrapped(base.begin(), base.end());
  for (const Arc& arc : base) unwrapped.push_back({arc.start + kTwoPi, arc.end + kTwoPi});

  struct Next {
    double value;  // attained point, or infimum when `open`
    bool open;     // true: any point slightly above `value` is in the set
    double room;   // open: end of the containing arc; closed: unused
  };
  // Infimum of the set points strictly greater than x.
  auto next_after = [&](double x) -> std::optional<Next> {
    auto it = std::upper_bound(unwrapped.begin(), unwrapped.end(), x,
                               [](double v, const Arc& arc) { return v < arc.end; });
    if (it == unwrapped.end()) return std::nullopt;
    if (it->start <= x) return Next{x, true, it->end};
    return Next{it->start, false, 0.0};
  };

  // Sliding the first point back to the start of its arc only widens the
  // gaps, so arc starts are the only first points worth trying; from there
  // the greedy choice of each later point is optimal.
  for (const Arc& first : base) {
    const double s = first.start;
    const double x1 = s + alpha;
    const auto second = next_after(x1);
    if (!second) continue;
    const double x2 = second->value + alpha;
    const auto third = next_after(x2);
    if (!third) continue;
    const double margin = s + kTwoPi - third->value - alpha;
    if (!(margin > 0.0)) continue;

    const double room3 = third->open ? std::min(third->room - x2, margin) : third->value - x2;
    const double eps2 = second->open ? std::min(second->room - x1, room3) / 3.0 : 0.0;
    const double t2 = second->open ? x1 + eps2 : second->value;
    const double t3 = third->open ? x2 + (second->open ? 2.0 * eps2 : 0.5 * room3) : third->value;
    ArcCheck result{false, {s, std::fmod(t2, kTwoPi), std::fmod(t3, kTwoPi)}};
    return result;
  }
  return {};
}

}  // namespace isodiam

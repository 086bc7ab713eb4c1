#include "isodiam/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

#include "isodiam/bounds.hpp"
#include "isodiam/diameters.hpp"
#include "isodiam/error.hpp"
#include "isodiam/random.hpp"

namespace isodiam {

namespace {

constexpr std::int64_t kDi[4] = {1, -1, 0, 0};
constexpr std::int64_t kDj[4] = {0, 0, 1, -1};

void validate(const SearchConfig& c) {
  if (!(c.delta > kDiskRegimeLimit && c.delta < kTwoDiskRegimeStart)) {
    throw InputError("search: delta must lie in (4/sqrt(3), 4)");
  }
  if (!(c.h > 0.0 && c.h < 1.0)) throw InputError("search: h must lie in (0, 1)");
  if (!(c.cooling > 0.0 && c.cooling < 1.0)) throw InputError("search: cooling must lie in (0, 1)");
  if (c.temperature_init < 0.0) throw InputError("search: temperature must be positive");
  if (c.diam_tolerance < 0.0) throw InputError("search: diam tolerance must be positive");
  if (c.triple_samples == 0) throw InputError("search: triple_samples must be positive");
}

// One annealing chain on a fixed lattice anchored at the origin. Cell
// centres carry the constraints: pairwise distance <= delta, and no three
// centres pairwise farther apart than 2 + slack.
class Chain {
 public:
  Chain(const SearchConfig& config, const PixelRegion& seed_region)
      : cfg_(config),
        h_(config.h),
        far_(2.0 + distance_slack(config.h)),
        tol_(config.diam_tolerance > 0.0 ? config.diam_tolerance : distance_slack(config.h)),
        half_extent_(static_cast<std::int64_t>(std::ceil(config.delta / config.h)) + 2),
        side_(2 * half_extent_ + 1),
        slot_(static_cast<std::size_t>(side_ * side_), -1) {
    for (const Cell& c : seed_region.cells()) insert(c);
    const auto [a, b] = diameter_pair(centers());
    witness_ = {cells_[a], cells_[b]};
    diam_ = distance(center(cells_[a]), center(cells_[b]));
  }

  SearchResult run() {
    Rng rng(cfg_.seed);
    double temperature = cfg_.temperature_init > 0.0 ? cfg_.temperature_init : 0.1 * h_ * h_;
    std::vector<Cell> best = cells_;
    std::uint64_t accepted = 0;

    for (std::uint64_t it = 0; it < cfg_.iterations; ++it) {
      const Cell c = cells_[rng.index(cells_.size())];
      const std::uint64_t dir = rng.index(4);
      const bool grow = rng.index(2) == 0;
      const double u = rng.uniform();

      if (grow) {
        const Cell nb{c.i + kDi[dir], c.j + kDj[dir]};
        if (in_grid(nb) && slot(nb) < 0 && try_add(nb)) ++accepted;
      } else if (cells_.size() > 3 && is_boundary(c)) {
        // Removing a cell loses h^2 of measure.
        if (u < std::exp(-h_ * h_ / temperature) && try_remove(c)) ++accepted;
      }
      if (cells_.size() > best.size()) best = cells_;
      temperature *= cfg_.cooling;
    }

    SearchResult result;
    result.best_region = PixelRegion({0.0, 0.0}, h_, std::move(best));
    result.best_measure = region_measure(result.best_region);
    result.iterations = cfg_.iterations;
    result.accepted_moves = accepted;
    return result;
  }

  bool feasible_start() const {
    if (diam_ > cfg_.delta || diam_ < cfg_.delta - tol_) return false;
    return diam3(centers()) <= far_;
  }

 private:
  Point center(Cell c) const { return {(c.i + 0.5) * h_, (c.j + 0.5) * h_}; }

  PointSet centers() const {
    PointSet out;
    out.reserve(cells_.size());
    for (const Cell& c : cells_) out.push_back(center(c));
    return out;
  }

  bool in_grid(Cell c) const {
    return std::abs(c.i) <= half_extent_ && std::abs(c.j) <= half_extent_;
  }

  std::int32_t& slot(Cell c) {
    return slot_[static_cast<std::size_t>((c.j + half_extent_) * side_ + (c.i + half_extent_))];
  }
  std::int32_t slot(Cell c) const {
    return slot_[static_cast<std::size_t>((c.j + half_extent_) * side_ + (c.i + half_extent_))];
  }

  void insert(Cell c) {
    slot(c) = static_cast<std::int32_t>(cells_.size());
    cells_.push_back(c);
  }

  void erase(Cell c) {
    const auto idx = static_cast<std::size_t>(slot(c));
    const Cell last = cells_.back();
    cells_[idx] = last;
    slot(last) = static_cast<std::int32_t>(idx);
    cells_.pop_back();
    slot(c) = -1;
  }

  bool occupied(Cell c) const { return in_grid(c) && slot(c) >= 0; }

  bool is_boundary(Cell c) const {
    for (int d = 0; d < 4; ++d) {
      if (!occupied({c.i + kDi[d], c.j + kDj[d]})) return true;
    }
    return false;
  }

  // A new centre p breaks the 3-diameter constraint exactly when two current
  // centres, both far from p, are far from each other.
  bool try_add(Cell c) {
    const Point p = center(c);
    far_points_.clear();
    double max_d = diam_;
    Cell partner = witness_.second;
    for (const Cell& q : cells_) {
      const double d = distance(p, center(q));
      if (d > cfg_.delta) return false;
      if (d > far_) far_points_.push_back(center(q));
      if (d > max_d) {
        max_d = d;
        partner = q;
      }
    }
    if (far_points_.size() >= 2) {
      const auto hull = convex_hull(far_points_);
      for (std::size_t x = 0; x < hull.size(); ++x) {
        for (std::size_t y = x + 1; y < hull.size(); ++y) {
          if (distance(far_points_[hull[x]], far_points_[hull[y]]) > far_) return false;
        }
      }
    }
    insert(c);
    if (max_d > diam_) {
      diam_ = max_d;
      witness_ = {c, partner};
    }
    return true;
  }

  bool try_remove(Cell c) {
    if (c != witness_.first && c != witness_.second) {
      erase(c);
      return true;
    }
    erase(c);
    const PointSet pts = centers();
    const auto [a, b] = diameter_pair(pts);
    const double d = distance(pts[a], pts[b]);
    if (d < cfg_.delta - tol_) {
      insert(c);
      return false;
    }
    witness_ = {cells_[a], cells_[b]};
    diam_ = d;
    return true;
  }

  SearchConfig cfg_;
  double h_;
  double far_;
  double tol_;
  std::int64_t half_extent_;
  std::int64_t side_;
  std::vector<std::int32_t> slot_;
  std::vector<Cell> cells_;
  std::pair<Cell, Cell> witness_;
  double diam_ = 0.0;
  PointSet far_points_;
};

}  // namespace

std::vector<Candidate> evaluate_candidates(double delta) {
  if (!(delta > 0.0)) throw InputError("evaluate_candidates: delta must be positive");
  std::vector<Candidate> out;
  out.push_back({"disk", kPi * delta * delta / 4.0, delta <= kDiskRegimeLimit});
  if (delta > 2.0 && delta < 4.0) out.push_back({"u_delta", u_delta_measure(delta), true});
  if (delta >= kTwoDiskRegimeStart) out.push_back({"two_disjoint_unit_disks", kTwoPi, true});
  return out;
}

double convex_candidate_measure(double delta) {
  if (!(delta >= 2.0)) throw InputError("convex candidate needs delta >= 2");
  // Unit disk plus two tangent kites from the segment endpoints, each
  // minus the disk sector they overlap.
  const double reach = 0.5 * delta;
  return kPi + 2.0 * (std::sqrt(reach * reach - 1.0) - std::acos(1.0 / reach));
}

FeasibilityReport check_feasibility(const PixelRegion& region, double delta, double diam_tolerance,
                                    std::size_t triple_samples, std::uint64_t sample_seed) {
  FeasibilityReport r;
  const PointSet pts = region.centers();
  r.diam_centers = diam(pts);
  r.diam_upper = delta;
  r.diam_lower = delta - diam_tolerance;
  r.region_diam = region_diam(region);
  r.diam3_centers = diam3(pts);
  r.diam3_sampled = region_diam3_sampled(region, triple_samples, sample_seed);
  r.diam3_threshold = 2.0 + distance_slack(region.h());
  r.feasible = r.diam_centers <= r.diam_upper && r.diam_centers >= r.diam_lower &&
               r.diam3_centers <= r.diam3_threshold;
  return r;
}

SearchResult anneal(const SearchConfig& config) {
  validate(config);
  const TwoDisksShape shape = u_delta_shape(config.delta);
  const PixelRegion seed_region = rasterize(shape, config.h);
  if (seed_region.size() < 3) throw InfeasibleError("search: h is too coarse to rasterise U_delta");

  Chain chain(config, seed_region);
  if (!chain.feasible_start()) {
    throw InfeasibleError("search: rasterised U_delta violates the constraints; h is too coarse for delta");
  }
  SearchResult result = chain.run();

  const double tol = config.diam_tolerance > 0.0 ? config.diam_tolerance : distance_slack(config.h);
  result.seed = config.seed;
  result.baseline_measure = region_measure(seed_region);
  result.u_delta_measure = u_delta_measure(config.delta);
  result.bound_value = *bound_profile(config.delta).stmt3;
  result.improvement = result.best_measure - result.baseline_measure;
  const double perimeter = 2.0 * (kTwoPi - 2.0 * std::acos(0.5 * shape.d));
  result.slack_measure = perimeter * distance_slack(config.h);
  result.exceeds_slack = result.improvement > result.slack_measure;
  result.feasibility = check_feasibility(result.best_region, config.delta, tol, config.triple_samples,
                                         derive_seed(config.seed, 0xFEA5));
  return result;
}

SearchResult anneal_chains(const SearchConfig& config, unsigned chains, unsigned threads) {
  if (chains == 0) throw InputError("search: need at least one chain");
  validate(config);
  std::vector<std::optional<SearchResult>> results(chains);
  std::vector<std::exception_ptr> errors(chains);
  std::atomic<unsigned> next{0};
  auto worker = [&] {
    for (unsigned k = next++; k < chains; k = next++) {
      try {
        SearchConfig c = config;
        c.seed = config.seed + k;
        results[k] = anneal(c);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const unsigned workers = std::clamp(threads, 1u, chains);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::size_t best = 0;
  for (std::size_t k = 1; k < results.size(); ++k) {
    if (results[k]->best_measure > results[best]->best_measure) best = k;
  }
  return std::move(*results[best]);
}

}  // namespace isodiam

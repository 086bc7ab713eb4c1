#include "isodiam/diameters.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "isodiam/error.hpp"

namespace isodiam {

namespace {

constexpr std::size_t kBruteForceDiam3 = 64;

// Dense adjacency rows, one bit per vertex.
class BitMatrix {
 public:
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t words() const { return words_; }
  void set(std::size_t i, std::size_t j) { row(i)[j / 64] |= std::uint64_t{1} << (j % 64); }
  std::uint64_t* row(std::size_t i) { return bits_.data() + i * words_; }
  const std::uint64_t* row(std::size_t i) const { return bits_.data() + i * words_; }

  bool rows_intersect(std::size_t i, std::size_t j) const {
    const std::uint64_t* a = row(i);
    const std::uint64_t* b = row(j);
    for (std::size_t w = 0; w < words_; ++w) {
      if (a[w] & b[w]) return true;
    }
    return false;
  }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

using Bits = std::vector<std::uint64_t>;

std::size_t popcount(const Bits& bits) {
  std::size_t count = 0;
  for (auto w : bits) count += static_cast<std::size_t>(std::popcount(w));
  return count;
}

bool any(const Bits& bits) {
  return std::any_of(bits.begin(), bits.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t first_bit(const Bits& bits) {
  for (std::size_t w = 0; w < bits.size(); ++w) {
    if (bits[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(bits[w]));
  }
  return std::numeric_limits<std::size_t>::max();
}

void clear_bit(Bits& bits, std::size_t i) { bits[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

void validate_ab(int a, int b) {
  if (!(b >= 2 && a > b)) {
    throw InputError("require a > b >= 2, got a=" + std::to_string(a) + ", b=" + std::to_string(b));
  }
}

void check_budget(std::size_t n, int a, std::uint64_t budget) {
  const std::uint64_t required = binomial(n, static_cast<std::uint64_t>(a));
  if (required > budget) {
    throw BudgetError("subset enumeration needs " + std::to_string(required) + " " + std::to_string(a) +
                          "-subsets but the budget is " + std::to_string(budget),
                      required, budget);
  }
}

// Advances `idx` (strictly increasing indices into [0, n)) to the next
// combination in lexicographic order; false after the last one.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (idx[i] != i + n - k) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  return idx;
}

std::vector<double> distance_matrix(std::span<const Point> points) {
  const std::size_t n = points.size();
  std::vector<double> d(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) d[i * n + j] = d[j * n + i] = distance(points[i], points[j]);
  }
  return d;
}

double diam3_brute_force(std::span<const Point> points) {
  const std::size_t n = points.size();
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dij = distance(points[i], points[j]);
      if (dij <= best) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        best = std::max(best, std::min({dij, distance(points[i], points[k]), distance(points[j], points[k])}));
      }
    }
  }
  return best;
}

// Branch-and-bound search for a k-clique in the far graph. Vertices are tried
// in increasing order, so the first clique found is lexicographically least.
class FarCliqueSearch {
 public:
  FarCliqueSearch(std::span<const Point> points, double threshold) : adj_(points.size()), n_(points.size()) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        if (distance(points[i], points[j]) > threshold) {
          adj_.set(i, j);
          adj_.set(j, i);
        }
      }
    }
  }

  std::optional<std::vector<std::size_t>> find(std::size_t k) {
    target_ = k;
    chosen_.clear();
    Bits all(adj_.words(), 0);
    for (std::size_t i = 0; i < n_; ++i) all[i / 64] |= std::uint64_t{1} << (i % 64);
    if (extend(all)) return chosen_;
    return std::nullopt;
  }

 private:
  // Greedy colouring of `cand`; stops once `need` colours are reached.
  std::size_t colour_bound(const Bits& cand, std::size_t need) const {
    Bits uncoloured = cand;
    std::size_t colours = 0;
    while (any(uncoloured) && colours < need) {
      ++colours;
      Bits q = uncoloured;
      while (any(q)) {
        const std::size_t v = first_bit(q);
        clear_bit(q, v);
        clear_bit(uncoloured, v);
        const std::uint64_t* nv = adj_.row(v);
        for (std::size_t w = 0; w < q.size(); ++w) q[w] &= ~nv[w];
      }
    }
    return colours;
  }

  bool extend(Bits cand) {
    if (chosen_.size() == target_) return true;
    const std::size_t need = target_ - chosen_.size();
    if (popcount(cand) < need || colour_bound(cand, need) < need) return false;
    while (any(cand)) {
      const std::size_t v = first_bit(cand);
      clear_bit(cand, v);
      Bits next = cand;  // only vertices after v remain in cand
      const std::uint64_t* nv = adj_.row(v);
      for (std::size_t w = 0; w < next.size(); ++w) next[w] &= nv[w];
      chosen_.push_back(v);
      if (extend(std::move(next))) return true;
      chosen_.pop_back();
      if (popcount(cand) < need) return false;
    }
    return false;
  }

  BitMatrix adj_;
  std::size_t n_;
  std::size_t target_ = 0;
  std::vector<std::size_t> chosen_;
};

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    result = result * (n - i) / (i + 1);
    if (result > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(result);
}

std::pair<std::size_t, std::size_t> diameter_pair(std::span<const Point> points) {
  if (points.empty()) throw InputError("diameter of an empty point set");
  const auto hull = convex_hull(points);
  std::pair<std::size_t, std::size_t> best{hull[0], hull[0]};
  double best_d = -1.0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    for (std::size_t j = i + 1; j < hull.size(); ++j) {
      const double d = distance(points[hull[i]], points[hull[j]]);
      if (d > best_d) {
        best_d = d;
        best = {hull[i], hull[j]};
      }
    }
  }
  return best;
}

double diam(std::span<const Point> points) {
  const auto [i, j] = diameter_pair(points);
  return distance(points[i], points[j]);
}

double diam3(std::span<const Point> points) {
  const std::size_t n = points.size();
  if (n < 3) return 0.0;
  if (n <= kBruteForceDiam3) return diam3_brute_force(points);

  // A good triple gives a lower bound t0; only edges of length >= t0 can be
  // the shortest edge of an optimal triple.
  const auto [p, q] = diameter_pair(points);
  double t0 = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    if (r == p || r == q) continue;
    t0 = std::max(t0, std::min({distance(points[p], points[q]), distance(points[p], points[r]),
                                distance(points[q], points[r])}));
  }

  struct Edge {
    double length;
    std::uint32_t i;
    std::uint32_t j;
  };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = distance(points[i], points[j]);
      if (d >= t0) edges.push_back({d, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& e, const Edge& f) { return e.length > f.length; });

  // Insert edges longest first; the first edge closing a triangle is that
  // triangle's shortest side, and no later triangle can beat it.
  BitMatrix adj(n);
  for (const Edge& e : edges) {
    if (adj.rows_intersect(e.i, e.j)) return e.length;
    adj.set(e.i, e.j);
    adj.set(e.j, e.i);
  }
  return t0;
}

double diam_ab(std::span<const Point> points, int a, int b, std::uint64_t budget) {
  validate_ab(a, b);
  const std::size_t n = points.size();
  const auto ua = static_cast<std::size_t>(a);
  const auto ub = static_cast<std::size_t>(b);
  if (n < ua) return 0.0;
  check_budget(n, a, budget);

  const auto dist = distance_matrix(points);
  double best = 0.0;
  auto subset = first_combination(ua);
  do {
    double subset_min = std::numeric_limits<double>::infinity();
    auto inner = first_combination(ub);
    do {
      double spread = 0.0;
      for (std::size_t x = 0; x < ub && spread < subset_min; ++x) {
        for (std::size_t y = x + 1; y < ub; ++y) {
          spread = std::max(spread, dist[subset[inner[x]] * n + subset[inner[y]]]);
        }
      }
      subset_min = std::min(subset_min, spread);
    } while (subset_min > best && next_combination(inner, ua));
    best = std::max(best, subset_min);
  } while (next_combination(subset, n));
  return best;
}

double triameter(std::span<const Point> points) {
  if (points.size() < 3) return 0.0;
  const auto hull = convex_hull(points);
  const std::size_t h = hull.size();
  if (h < 3) return 0.0;
  auto area = [&](std::size_t i, std::size_t j, std::size_t k) {
    return triangle_area(points[hull[i % h]], points[hull[j % h]], points[hull[k % h]]);
  };
  // For a fixed first vertex, the optimal third vertex moves monotonically
  // forward as the second one does.
  double best = 0.0;
  for (std::size_t i = 0; i < h; ++i) {
    std::size_t k = i + 2;
    for (std::size_t j = i + 1; j < i + h - 1; ++j) {
      if (k <= j) k = j + 1;
      while (k + 1 < i + h && area(i, j, k + 1) >= area(i, j, k)) ++k;
      best = std::max(best, area(i, j, k));
    }
  }
  return best;
}

TabResult tab_check(std::span<const Point> points, int a, int b, double threshold, std::uint64_t budget) {
  validate_ab(a, b);
  if (!(threshold > 0.0)) throw InputError("tab_check: threshold must be positive");
  const std::size_t n = points.size();
  const auto ua = static_cast<std::size_t>(a);
  const auto ub = static_cast<std::size_t>(b);
  if (n < ua) return {};
  check_budget(n, a, budget);

  // With b = 2 an a-subset violates exactly when its points are pairwise far.
  if (b == 2) {
    if (auto far = find_far_subset(points, ua, threshold)) return {false, std::move(*far)};
    return {};
  }

  std::vector<char> close(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) close[i * n + j] = distance(points[i], points[j]) <= threshold;
  }
  auto subset = first_combination(ua);
  do {
    bool found = false;
    auto inner = first_combination(ub);
    do {
      bool clique = true;
      for (std::size_t x = 0; x < ub && clique; ++x) {
        for (std::size_t y = x + 1; y < ub && clique; ++y) {
          clique = close[subset[inner[x]] * n + subset[inner[y]]];
        }
      }
      found = clique;
    } while (!found && next_combination(inner, ua));
    if (!found) return {false, subset};
  } while (next_combination(subset, n));
  return {};
}

std::optional<std::vector<std::size_t>> find_far_subset(std::span<const Point> points, std::size_t k,
                                                        double threshold) {
  if (k == 0) return std::vector<std::size_t>{};
  if (points.size() < k) return std::nullopt;
  FarCliqueSearch search(points, threshold);
  return search.find(k);
}

DiameterReport diameter_report(std::span<const Point> points, std::span<const std::pair<int, int>> ab_pairs,
                               std::uint64_t budget) {
  DiameterReport report;
  report.diam = diam(points);
  report.diam3 = diam3(points);
  report.triameter = triameter(points);
  for (const auto& [a, b] : ab_pairs) report.ab_entries.push_back({a, b, diam_ab(points, a, b, budget)});
  return report;
}

}  // namespace isodiam

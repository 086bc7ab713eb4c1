#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "isodiam/geometry.hpp"

namespace testing {

using isodiam::Point;
using isodiam::PointSet;

// xorshift64* generator, deliberately unrelated to the library's RNG.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : state_(seed * 0x9E3779B97F4A7C15ull + 0x2545F4914F6CDD1Dull) {
    if (state_ == 0) state_ = 1;
  }

  std::uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1Dull;
  }
  double unit() { return static_cast<double>(next() >> 11) / 9007199254740992.0; }
  double real(double lo, double hi) { return lo + (hi - lo) * unit(); }
  int integer(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }

  PointSet points(std::size_t n, double lo, double hi) {
    PointSet out(n);
    for (auto& p : out) p = {real(lo, hi), real(lo, hi)};
    return out;
  }

 private:
  std::uint64_t state_;
};

inline double dist(Point p, Point q) { return std::sqrt((p.x - q.x) * (p.x - q.x) + (p.y - q.y) * (p.y - q.y)); }

inline double brute_diam(const PointSet& s) {
  double best = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) best = std::max(best, dist(s[i], s[j]));
  return best;
}

inline double brute_diam3(const PointSet& s) {
  double best = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      for (std::size_t k = j + 1; k < s.size(); ++k)
        best = std::max(best, std::min({dist(s[i], s[j]), dist(s[i], s[k]), dist(s[j], s[k])}));
  return best;
}

inline double brute_triameter(const PointSet& s) {
  double best = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      for (std::size_t k = j + 1; k < s.size(); ++k) {
        const double area =
            0.5 * std::abs((s[j].x - s[i].x) * (s[k].y - s[i].y) - (s[j].y - s[i].y) * (s[k].x - s[i].x));
        best = std::max(best, area);
      }
  return best;
}

// Visits every k-subset of {0..n-1} via a bitmask; only for small n.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    idx.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    f(idx);
  }
}

// max over a-subsets of the min over b-subsets of the largest pairwise distance.
inline double brute_diam_ab(const PointSet& s, std::size_t a, std::size_t b) {
  if (s.size() < a) return 0.0;
  double best = 0.0;
  for_each_subset(s.size(), a, [&](const std::vector<std::size_t>& A) {
    double inner = INFINITY;
    for_each_subset(a, b, [&](const std::vector<std::size_t>& B) {
      double d = 0.0;
      for (std::size_t x = 0; x < B.size(); ++x)
        for (std::size_t y = x + 1; y < B.size(); ++y) d = std::max(d, dist(s[A[B[x]]], s[A[B[y]]]));
      inner = std::min(inner, d);
    });
    best = std::max(best, inner);
  });
  return best;
}

// Circumradius by R = abc / (4 area).
inline double circumradius_abc(double a, double b, double c) {
  const double s = 0.5 * (a + b + c);
  const double area = std::sqrt(s * (s - a) * (s - b) * (s - c));
  return a * b * c / (4.0 * area);
}

}  // namespace testing

#include "isodiam/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "isodiam/error.hpp"

namespace isodiam {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) throw InputError(std::string(what) + " must be a positive finite real");
}

// delta^4 / (delta^2 - 1), defined for delta > 1.
double quartic_ratio(double delta) {
  const double d2 = delta * delta;
  return d2 * d2 / (d2 - 1.0);
}

constexpr std::array<std::pair<BoundId, std::string_view>, 5> kBoundNames{{
    {BoundId::stmt1, "stmt1"},
    {BoundId::stmt3, "stmt3"},
    {BoundId::convex_blaschke, "convex_blaschke"},
    {BoundId::convex_improved, "convex_improved"},
    {BoundId::symmetric, "symmetric"},
}};

}  // namespace

double jung_radius(double delta) {
  require_positive(delta, "delta");
  return delta / kSqrt3;
}

double gen_jung_radius(double delta, double tau) {
  require_positive(delta, "delta");
  require_positive(tau, "tau");
  if (tau > delta) throw InputError("gen_jung_radius: tau must not exceed delta");
  return 0.5 * delta * delta / std::sqrt(delta * delta - 0.25 * tau * tau);
}

double circle_bound(double r) {
  require_positive(r, "r");
  if (r <= 2.0 / kSqrt3) throw InputError("circle_bound: radius must exceed 2/sqrt(3)");
  return 4.0 / 3.0 * kPi * r;
}

double ta2_bound(int a) {
  if (a < 3) throw InputError("ta2_bound: a must be at least 3");
  return (a - 1) * kPi;
}

int nb_of(int a, int b) {
  if (a < 3 || b < 2) throw InputError("nb_of: need a >= 3 and b >= 2");
  return (b - 1) * a - b + 2;
}

double max_triangle_area_in_disk(double rho) {
  require_positive(rho, "rho");
  return 3.0 * kSqrt3 / 4.0 * rho * rho;
}

namespace raw {
double stmt1(double delta) { return kPi * delta * delta / 4.0; }
double stmt3(double delta) { return kPi / 6.0 * quartic_ratio(delta) + 4.0 * kPi / 9.0; }
double convex_blaschke(double delta) { return 4.0 * kPi / (3.0 * kSqrt3) * delta; }
double convex_improved(double delta) { return kPi / 4.0 * quartic_ratio(delta); }
double symmetric(double delta) { return kPi * delta * delta / 6.0 + 4.0 * kPi / 9.0; }
}  // namespace raw

BoundProfile bound_profile(double delta) {
  require_positive(delta, "delta");
  BoundProfile p;
  p.delta = delta;
  if (delta <= kDiskRegimeLimit) p.stmt1 = raw::stmt1(delta);
  p.stmt2_applicable = delta >= kTwoDiskRegimeStart;
  p.stmt3_applicable = delta > kDiskRegimeLimit && delta < kTwoDiskRegimeStart;
  p.convex_symmetric_applicable = delta > kDiskRegimeLimit;
  p.convex_blaschke = std::min(raw::convex_blaschke(delta), kTwoPi);
  p.symmetric = std::min(raw::symmetric(delta), kTwoPi);
  p.jung_radius = jung_radius(delta);
  if (delta > 1.0) {
    p.stmt3 = std::min(raw::stmt3(delta), kTwoPi);
    p.convex_improved = std::min(raw::convex_improved(delta), kTwoPi);
    p.gen_jung_radius_tau2 = 0.5 * delta * delta / std::sqrt(delta * delta - 1.0);
  }
  return p;
}

std::string_view to_string(BoundId id) {
  for (const auto& [key, name] : kBoundNames) {
    if (key == id) return name;
  }
  return "unknown";
}

std::optional<BoundId> bound_id_from_string(std::string_view name) {
  for (const auto& [key, label] : kBoundNames) {
    if (label == name) return key;
  }
  return std::nullopt;
}

double bound_value(BoundId id, double delta) {
  switch (id) {
    case BoundId::stmt1: return raw::stmt1(delta);
    case BoundId::stmt3: return raw::stmt3(delta);
    case BoundId::convex_blaschke: return raw::convex_blaschke(delta);
    case BoundId::convex_improved: return raw::convex_improved(delta);
    case BoundId::symmetric: return raw::symmetric(delta);
  }
  throw InputError("unknown bound id");
}

double crossover(BoundId id, double reference, double lo, double hi) {
  if (!(lo < hi)) throw InputError("crossover: need lo < hi");
  double f_lo = bound_value(id, lo) - reference;
  const double f_hi = bound_value(id, hi) - reference;
  if (!std::isfinite(f_lo) || !std::isfinite(f_hi) || f_lo * f_hi > 0.0) {
    throw InputError("crossover: " + std::string(to_string(id)) + " does not cross the reference on [" +
                     std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = bound_value(id, mid) - reference;
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace isodiam

#pragma once

#include <numbers>
#include <optional>
#include <string_view>

namespace isodiam {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
/// Diameter of the smallest disk containing an equilateral triangle of side 2.
inline constexpr double kDiskRegimeLimit = 4.0 / std::numbers::sqrt3;
inline constexpr double kTwoDiskRegimeStart = 4.0;

/// Covering radius of Jung's theorem: delta / sqrt(3).
double jung_radius(double delta);

/// Covering radius for a planar set of diameter `delta` whose 3-diameter is
/// `tau` <= delta: delta^2 / (2 sqrt(delta^2 - tau^2/4)), the circumradius of
/// the isosceles triangle with sides (delta, delta, tau).
double gen_jung_radius(double delta, double tau);

/// Upper bound (4/3) pi r on the length of a T(3,2) subset of a circle of
/// radius r > 2/sqrt(3).
double circle_bound(double r);

/// Area bound (a - 1) pi for T(a,2)-sets, a >= 3.
double ta2_bound(int a);

/// N_b = (b - 1) a - b + 2: T(N_b, b)-sets obey the same (a - 1) pi bound.
int nb_of(int a, int b);

/// Largest triangle inside a disk of radius rho: the inscribed equilateral
/// one, area (3 sqrt 3 / 4) rho^2.
double max_triangle_area_in_disk(double rho);

/// Closed-form bounds for T(3,2)-sets, before clamping at 2 pi.
namespace raw {
double stmt1(double delta);            // pi delta^2 / 4
double stmt3(double delta);            // pi/6 d^4/(d^2-1) + 4 pi/9
double convex_blaschke(double delta);  // 4 pi delta / (3 sqrt 3)
double convex_improved(double delta);  // pi/4 d^4/(d^2-1)
double symmetric(double delta);        // pi d^2/6 + 4 pi/9
}  // namespace raw

struct BoundProfile {
  double delta = 0.0;
  std::optional<double> stmt1;  // present only for delta <= 4/sqrt(3)
  double stmt2 = kTwoPi;
  bool stmt2_applicable = false;  // delta >= 4
  std::optional<double> stmt3;    // min{raw::stmt3, 2 pi}, present for delta > 1
  bool stmt3_applicable = false;  // 4/sqrt(3) < delta < 4
  double convex_blaschke = 0.0;   // min{raw, 2 pi}
  std::optional<double> convex_improved;
  std::optional<double> symmetric;
  bool convex_symmetric_applicable = false;  // delta > 4/sqrt(3)
  double jung_radius = 0.0;
  std::optional<double> gen_jung_radius_tau2;  // delta^2 / (2 sqrt(delta^2 - 1)), delta > 1
};

/// Evaluates every bound at `delta`. Throws InputError for delta <= 0.
BoundProfile bound_profile(double delta);

enum class BoundId { stmt1, stmt3, convex_blaschke, convex_improved, symmetric };

std::string_view to_string(BoundId id);
std::optional<BoundId> bound_id_from_string(std::string_view name);

/// Unclamped closed form of `id` at `delta`.
double bound_value(BoundId id, double delta);

/// Bisection for the delta in [lo, hi] where the unclamped bound equals
/// `reference`, to within 1e-9. Throws InputError without a sign change.
double crossover(BoundId id, double reference, double lo, double hi);

}  // namespace isodiam

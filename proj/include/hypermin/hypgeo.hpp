#pragma once

// Poincare ball-model geometry: metric quantities, distances, hyperbolic
// circles and horocycles, and the boundary-condition predicates (interior /
// exterior sphere, exterior horosphere, hyperbolic convexity) for sampled
// closed curves in the n = 2 chart.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hypermin::hypgeo {

using Vec = std::vector<double>;

/// A point of the Poincare ball model, |coords| < 1.
struct HPoint {
  Vec coords;

  HPoint() = default;
  explicit HPoint(Vec c);
  HPoint(double x, double y) : HPoint(Vec{x, y}) {}

  static HPoint origin(int n);

  int dim() const { return static_cast<int>(coords.size()); }
  double norm2() const;
  double norm() const;
  double operator[](std::size_t i) const { return coords[i]; }
};

/// F(p) = ((1 - |p|^2)/2)^2, the squared reciprocal of half the conformal
/// factor of the ball metric ds = 2|dx|/(1-|x|^2).
double conformal_factor(const HPoint& p);

double hyp_distance(const HPoint& p, const HPoint& q);

/// Mobius gyroaddition a (+) x. x -> a (+) x is the hyperbolic translation
/// taking the origin to a; its inverse is x -> (-a) (+) x.
Vec mobius_add(const Vec& a, const Vec& x);

/// Point at hyperbolic distance `dist` from p along the geodesic with unit
/// chart direction `dir` at p.
HPoint geodesic_point(const HPoint& p, const Vec& dir, double dist);

/// A hyperbolic circle carrying both representations. In the ball model a
/// hyperbolic circle is a Euclidean circle with a shifted center.
struct HCircle {
  HPoint hyp_center;
  double hyp_radius = 0;
  Vec euc_center;
  double euc_radius = 0;
};

HCircle hyp_circle(const HPoint& center, double radius);
HCircle hcircle_from_euclidean(const Vec& euc_center, double euc_radius);

/// Horocycle in the disk (n = 2): Euclidean circle internally tangent to the
/// unit circle at the asymptotic point, |euc_center| + euc_radius = 1.
struct Horocycle {
  Vec asymptotic_point;
  Vec euc_center;
  double euc_radius = 0;
};

/// Horocycle through p with asymptotic point xi (unit vector).
Horocycle horocycle_through(const HPoint& p, const Vec& xi);

/// Closed sampled curve in the chart, last point connects back to the first.
struct SampledCurve {
  std::vector<HPoint> points;
  int dim = 2;

  SampledCurve() = default;
  SampledCurve(std::vector<HPoint> pts, bool check_simple = true);

  std::size_t size() const { return points.size(); }
  const HPoint& operator[](std::size_t i) const { return points[i]; }

  /// Signed area in the chart; > 0 for counterclockwise orientation (n = 2).
  double signed_area() const;
  /// Winding-number point containment in the chart (n = 2).
  bool contains(const HPoint& p) const;
  /// Euclidean chart distance from a point to the polygonal curve.
  double chart_distance(const Vec& p) const;
  /// Estimated inward unit normal (chart) at sample i.
  Vec inward_normal(std::size_t i) const;
};

double set_distance(const SampledCurve& a, const SampledCurve& b,
                    double tol = 1e-8);
/// Hyperbolic distance from a point to a sampled curve, same refinement.
double curve_distance(const HPoint& p, const SampledCurve& c,
                      double tol = 1e-8);

/// Result of a pointwise predicate sweep along a curve.
struct PredicateReport {
  bool ok = true;
  /// Sample indices where no witness was found.
  std::vector<std::size_t> failures;
  /// Per-sample best margin (>= -tolerance means pass at that sample).
  std::vector<double> margins;
};

constexpr double kContainmentTol = 1e-6;
constexpr double kSideTol = 1e-9;

PredicateReport interior_sphere_check(const SampledCurve& curve, double R,
                                      double tol = kContainmentTol);

/// R = infinity selects the exterior horosphere condition (n = 2).
constexpr double kInfiniteRadius = -1.0;

PredicateReport exterior_sphere_check(const SampledCurve& curve, double R,
                                      double tol = kContainmentTol);

PredicateReport convexity_check(const SampledCurve& curve,
                                double tol = kSideTol);

/// Geodesic line of the disk: circle orthogonal to the unit circle, or a
/// diameter (tagged to avoid the infinite-radius representation).
struct GeodesicLine {
  bool is_diameter = false;
  Vec center;     // orthogonal-circle center, |center|^2 = 1 + radius^2
  double radius = 0;
  Vec direction;  // unit direction, diameter case
};

/// Geodesic through p with chart tangent direction (cos psi, sin psi).
GeodesicLine geodesic_through(const HPoint& p, double psi);
/// Signed chart distance from q to the geodesic (sign = side).
double geodesic_side(const GeodesicLine& g, const Vec& q);

/// Best interior tangent circle of hyperbolic radius R at sample i, together
/// with its containment margin; used by the barrier constructions.
struct TangentWitness {
  HCircle circle;
  double margin = 0;
};
std::optional<TangentWitness> interior_tangent_circle(
    const SampledCurve& curve, std::size_t i, double R,
    double tol = kContainmentTol);
std::optional<TangentWitness> exterior_tangent_circle(
    const SampledCurve& curve, std::size_t i, double R,
    double tol = kContainmentTol);
/// Exterior tangent horocycle at sample i (n = 2), with avoidance margin.
struct HoroWitness {
  Horocycle horocycle;
  double margin = 0;
};
std::optional<HoroWitness> exterior_tangent_horocycle(
    const SampledCurve& curve, std::size_t i, double tol = kContainmentTol);

}  // namespace hypermin::hypgeo

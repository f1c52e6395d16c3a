#pragma once

// Minimal surface foliated by horizontal horocycles, in the canonical
// position: asymptotic point (0, 1), symmetric about the slice t = 0.
// Each level u carries the horocycle
//   x^2 + (y - cos u/(1+cos u))^2 = 1/(1+cos u)^2,
// and the upper half is the vertical graph of the level function Upsilon
// over the band between the u = 0 horocycle and the ideal boundary.

#include <array>

#include "hypermin/hypgeo.hpp"

namespace hypermin::horosurf {

/// Canonical parameterization point (x, y, t); u in (-pi/2, pi/2), theta in
/// (pi/2, 5pi/2).
std::array<double, 3> surface_point(double u, double theta);

/// Level of the foliating horocycle through q, in [0, pi/2). q must lie in
/// the closed band between the u = 0 horocycle and the ideal boundary.
double upsilon(const hypgeo::HPoint& q);

/// Like upsilon but saturating at pi/2 outside the foliated band on the far
/// side; the barrier constructions take min with a height below pi/2, so
/// the saturated value never leaks through.
double upsilon_or_cap(const hypgeo::HPoint& q);

/// Hyperbolic distance ln(sec h) between the u = 0 horocycle and the
/// projection of the u = h one.
double horocycle_gap(double h);

/// Band between the u = 0 horocycle and the projected level-h horocycle.
struct HoroRegion {
  double level = 0;

  explicit HoroRegion(double h);

  /// Euclidean radius of the projected horocycle of level u: 1/(1+cos u).
  static double projected_radius(double u);
  static std::array<double, 2> projected_center(double u);

  bool contains(const hypgeo::HPoint& q) const;
};

/// Marker type for the canonical surface with evaluation helpers.
struct HoroSurface {
  static std::array<double, 3> at(double u, double theta) {
    return surface_point(u, theta);
  }
};

}  // namespace hypermin::horosurf

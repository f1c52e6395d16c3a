#pragma once

// Reference curves used across tests, the CLI demos, and the predicate
// documentation: hyperbolic circles, Euclidean ellipses, the bean-shaped
// curve (exterior-sphere pass, convexity fail) and the thin near-boundary
// ellipse (horosphere pass, convexity fail).

#include "hypermin/hypgeo.hpp"

namespace hypermin::fixtures {

/// Sampled hyperbolic circle of the given hyperbolic radius.
hypgeo::SampledCurve circle_curve(const hypgeo::HPoint& center, double radius,
                                  int samples = 1024);

/// Euclidean ellipse (cx + a cos t, cy + b sin t).
hypgeo::SampledCurve ellipse_curve(double cx, double cy, double a, double b,
                                   int samples = 1024);

/// Kidney-shaped polar curve r(phi) = base - depth * exp(-(phi/width)^2):
/// one smooth concave dent. With the default parameters the dent's concave
/// Euclidean curvature radius stays above 0.075, so exterior circles of
/// hyperbolic radius <= bean_exterior_radius() fit, while the dent defeats
/// every supporting geodesic.
hypgeo::SampledCurve bean_curve(int samples = 1024, double base = 0.45,
                                double depth = 0.18, double width = 0.55);

/// Exterior-sphere radius certified for the default bean curve.
double bean_exterior_radius();

/// Thin ellipse pushed toward the ideal boundary: passes the exterior
/// horosphere condition but has no supporting geodesic on the side facing
/// the origin.
hypgeo::SampledCurve boundary_ellipse_curve(int samples = 1024);

}  // namespace hypermin::fixtures

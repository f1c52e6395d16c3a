#pragma once

// Adaptive Gauss-Kronrod (G7, K15) quadrature with panel bisection.

#include <functional>

namespace hypermin::quadrature {

struct Result {
  double value = 0;
  double error = 0;  // accumulated Kronrod error estimate
  int panels = 0;
};

/// Integrate f over [a, b], subdividing panels until the local error
/// estimate is below max(abs_tol, rel_tol * |running integral|) scaled by
/// panel width. Throws on panel exhaustion.
Result integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-12, double abs_tol = 1e-300,
                 int max_panels = 4000);

}  // namespace hypermin::quadrature

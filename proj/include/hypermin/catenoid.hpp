#pragma once

// The rotational minimal family: generator profile integrals of the
// n-dimensional half-catenoid, heights, inverses, and graph evaluation.
//
// The generator of neck radius r is
//   g_r(rho) = int_r^rho sinh^{n-1}(r) / sqrt(sinh^{2n-2}(xi) -
//              sinh^{2n-2}(r)) dxi,
// an increasing function with an inverse-square-root endpoint singularity
// that the substitution xi = r + s^2 removes.

#include <utility>
#include <vector>

#include "hypermin/hypgeo.hpp"

namespace hypermin::catenoid {

/// g_r(rho) by adaptive quadrature after the singularity substitution.
/// Relative tolerance 1e-10. Requires n >= 2 and 0 < r <= rho.
double profile_value(int n, double r, double rho);

/// Total height h+(r) of the half-catenoid, strictly below pi/(2(n-1)).
/// The tail is cut where the explicit remainder bound drops below 1e-12.
double half_height(int n, double r);

/// The radius R_h >= R with g_R(R_h) = h, to 1e-10. Requires
/// 0 <= h < half_height(n, R).
double invert_profile(int n, double R, double h);

/// Crossing of two generator profiles g_{r1}, g_{r2} with r1 < r2: the
/// unique rho >= r2 where they agree, and the common height, to 1e-8.
std::pair<double, double> profile_intersection(int n, double r1, double r2);

/// Tabulated profile with monotone cubic interpolation in s = sqrt(rho - r),
/// validated against direct quadrature to 1e-9 at construction.
class CatenoidProfile {
 public:
  CatenoidProfile(int n, double r, double rho_max);

  int n() const { return n_; }
  double neck_radius() const { return r_; }
  double rho_max() const { return rho_max_; }

  /// g_r(rho); interpolated inside the table, direct quadrature beyond it.
  double value(double rho) const;

  const std::vector<std::pair<double, double>>& table() const {
    return table_;
  }

 private:
  int n_;
  double r_;
  double rho_max_;
  std::vector<double> s_;      // sqrt(rho - r) nodes, s_[0] = 0
  std::vector<double> g_;      // profile values at nodes
  std::vector<double> slope_;  // Fritsch-Carlson monotone derivatives
  std::vector<std::pair<double, double>> table_;
};

/// Vertical graph of sign * g_r(dist to center) + offset over the exterior
/// of the neck sphere.
struct CatenoidGraph {
  CatenoidProfile profile;
  hypgeo::HPoint center;
  int sign = 1;       // +1 upper half, -1 lower half
  double offset = 0;  // vertical translation

  CatenoidGraph(CatenoidProfile p, hypgeo::HPoint c, int sgn, double off)
      : profile(std::move(p)), center(std::move(c)), sign(sgn), offset(off) {}

  double height(const hypgeo::HPoint& q) const;
};

double graph_eval(const CatenoidGraph& g, const hypgeo::HPoint& q);

}  // namespace hypermin::catenoid

#include "hypermin/horosurf.hpp"

#include <cmath>
#include <stdexcept>

namespace hypermin::horosurf {

namespace {
constexpr double kPi = 3.14159265358979323846;

// kappa = 1 + cos u solved from the horocycle equation through (x, y).
double level_kappa(double x, double y) {
  const double w = x * x + (1.0 - y) * (1.0 - y);
  if (w == 0) throw std::invalid_argument("upsilon: asymptotic point");
  return 2.0 * (1.0 - y) / w;
}
}  // namespace

std::array<double, 3> surface_point(double u, double theta) {
  if (!(u > -kPi / 2 && u < kPi / 2))
    throw std::invalid_argument("surface_point: u out of (-pi/2, pi/2)");
  if (!(theta > kPi / 2 && theta < 5 * kPi / 2))
    throw std::invalid_argument("surface_point: theta out of (pi/2, 5pi/2)");
  const double k = 1.0 + std::cos(u);
  return {std::cos(theta) / k, (std::cos(u) + std::sin(theta)) / k, u};
}

double upsilon(const hypgeo::HPoint& q) {
  if (q.dim() != 2) throw std::invalid_argument("upsilon: n = 2 only");
  const double k = level_kappa(q[0], q[1]);
  const double cu = k - 1.0;
  if (cu > 1.0 + 1e-12)
    throw std::invalid_argument("upsilon: point inside the u = 0 horoball");
  if (cu <= 0.0)
    throw std::invalid_argument("upsilon: no foliating level below pi/2");
  return std::acos(std::min(cu, 1.0));
}

double upsilon_or_cap(const hypgeo::HPoint& q) {
  const double cu = level_kappa(q[0], q[1]) - 1.0;
  if (cu > 1.0 + 1e-12)
    throw std::invalid_argument(
        "upsilon_or_cap: point inside the u = 0 horoball");
  if (cu <= 0.0) return kPi / 2;
  return std::acos(std::min(cu, 1.0));
}

double horocycle_gap(double h) {
  if (!(h >= 0 && h < kPi / 2))
    throw std::invalid_argument("horocycle_gap: h out of [0, pi/2)");
  return -std::log(std::cos(h));
}

HoroRegion::HoroRegion(double h) : level(h) {
  if (!(h >= 0 && h < kPi / 2))
    throw std::invalid_argument("HoroRegion: level out of [0, pi/2)");
}

double HoroRegion::projected_radius(double u) {
  return 1.0 / (1.0 + std::cos(u));
}

std::array<double, 2> HoroRegion::projected_center(double u) {
  return {0.0, std::cos(u) / (1.0 + std::cos(u))};
}

bool HoroRegion::contains(const hypgeo::HPoint& q) const {
  const double cu = level_kappa(q[0], q[1]) - 1.0;
  return cu <= 1.0 + 1e-12 && cu >= std::cos(level) - 1e-12;
}

}  // namespace hypermin::horosurf

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hypermin/catenoid.hpp"
#include "hypermin/horosurf.hpp"
#include "hypermin/solver.hpp"

// Barrier envelopes: at an inner-curve point p the subsolution is the upper
// half of a catenoid hung from the tangent interior sphere,
//   v_p = max(h - g_{R1}(dist to c_p*), 0),
// paired with the constant supersolution h. At an outer point the
// subsolution is the constant 0 and the supersolution is either the lower
// catenoid piece over the tangent exterior sphere, min(g_{R2}(dist), h), or
// in the horosphere case the horocycle-foliated graph min(Upsilon o Phi, h)
// with Phi the positive isometry taking the tangent horocycle to the
// canonical one.

namespace hypermin::solver {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<std::size_t> spread_indices(std::size_t total, int count) {
  std::vector<std::size_t> idx;
  const int c = std::min<std::size_t>(count, total);
  for (int k = 0; k < c; ++k) idx.push_back(k * total / c);
  return idx;
}

// Level of the foliating horocycle clamped into [0, pi/2]; points numerically
// inside the canonical horoball read as level 0, points past every level as
// pi/2. Only used under a min with h < pi/2.
double clamped_level(double x, double y) {
  const double w = x * x + (1.0 - y) * (1.0 - y);
  const double cu = w == 0 ? -1.0 : 2.0 * (1.0 - y) / w - 1.0;
  return std::acos(std::clamp(cu, 0.0, 1.0));
}

struct CanonicalMap {
  // q -> rotate(mobius_add(-p, q)) sending the tangency point to the origin
  // and the horocycle's asymptotic point to (0, 1).
  hypgeo::Vec minus_p;
  double cos_rot, sin_rot;

  std::array<double, 2> operator()(const hypgeo::HPoint& q) const {
    const auto t = hypgeo::mobius_add(minus_p, q.coords);
    return {cos_rot * t[0] - sin_rot * t[1],
            sin_rot * t[0] + cos_rot * t[1]};
  }
  std::array<double, 2> inverse(double x, double y) const {
    const double rx = cos_rot * x + sin_rot * y;
    const double ry = -sin_rot * x + cos_rot * y;
    const hypgeo::Vec p{-minus_p[0], -minus_p[1]};
    const auto t = hypgeo::mobius_add(p, {rx, ry});
    return {t[0], t[1]};
  }
};

CanonicalMap canonical_horocycle_map(const hypgeo::HPoint& p,
                                     const hypgeo::Vec& xi) {
  CanonicalMap map;
  map.minus_p = {-p[0], -p[1]};
  // Boundary image of the asymptotic point under the translation.
  const auto xi1 = hypgeo::mobius_add(map.minus_p, xi);
  const double ang = std::atan2(xi1[1], xi1[0]);
  const double rot = kPi / 2 - ang;
  map.cos_rot = std::cos(rot);
  map.sin_rot = std::sin(rot);
  return map;
}

}  // namespace

BarrierReport barrier_envelope(const certify::DomainSpec& spec,
                               const certify::BoundaryData& data,
                               const HeightField& field,
                               const BarrierOptions& opts) {
  BarrierReport report;
  report.certificate = certify::certify_theorem1(spec, data);
  if (report.certificate.verdict != certify::Verdict::Exists)
    throw std::invalid_argument(
        "barrier_envelope: configuration does not certify EXISTS");

  const Mesh& mesh = *field.mesh;
  const double h = data.inner_height;
  const double R1 = spec.conditions.inner_sphere_radius;
  const double delta = *report.certificate.thresholds.delta;
  const bool horo =
      spec.conditions.outer == certify::OuterCondition::Horosphere;
  report.worst_margin = std::numeric_limits<double>::infinity();

  // Shared profiles; evaluations past the table fall back to quadrature.
  catenoid::CatenoidProfile prof_in(spec.n, R1, R1 + delta + 2.0);
  const double Rh_in = h > 0 ? catenoid::invert_profile(spec.n, R1, h) : R1;

  for (std::size_t ci = 0; ci < spec.inners.size(); ++ci) {
    const auto& curve = spec.inners[ci];
    for (std::size_t s : spread_indices(curve.size(), opts.points_per_curve)) {
      const auto witness = hypgeo::interior_tangent_circle(curve, s, R1);
      if (!witness)
        throw std::runtime_error(
            "barrier_envelope: tangent interior sphere construction failed");
      const hypgeo::HPoint& cp = witness->circle.hyp_center;
      BarrierPointCheck chk;
      chk.curve = static_cast<int>(ci);
      chk.sample_index = s;
      chk.lower_margin = std::numeric_limits<double>::infinity();
      chk.upper_margin = std::numeric_limits<double>::infinity();
      for (std::size_t v = 0; v < mesh.vertex_count(); ++v) {
        const double rho = hypgeo::hyp_distance(mesh.point(v), cp);
        double vp = 0;
        if (rho < Rh_in)
          vp = std::max(0.0, h - prof_in.value(std::max(rho, R1)));
        chk.lower_margin = std::min(chk.lower_margin, field.values[v] - vp);
        chk.upper_margin = std::min(chk.upper_margin, h - field.values[v]);
      }
      chk.ok = chk.lower_margin >= -opts.tol && chk.upper_margin >= -opts.tol;
      report.worst_margin = std::min(
          {report.worst_margin, chk.lower_margin, chk.upper_margin});
      if (!chk.ok) report.ok = false;
      report.checks.push_back(chk);
    }
  }

  const double R2 = spec.conditions.outer_sphere_radius;
  std::optional<catenoid::CatenoidProfile> prof_out;
  double Rh_out = 0;
  if (!horo) {
    prof_out.emplace(spec.n, R2, R2 + delta + 2.0);
    Rh_out = h > 0 ? catenoid::invert_profile(spec.n, R2, h) : R2;
  }

  for (std::size_t s :
       spread_indices(spec.outer.size(), opts.points_per_curve)) {
    BarrierPointCheck chk;
    chk.curve = -1;
    chk.sample_index = s;
    chk.lower_margin = std::numeric_limits<double>::infinity();
    chk.upper_margin = std::numeric_limits<double>::infinity();
    if (!horo) {
      const auto witness = hypgeo::exterior_tangent_circle(spec.outer, s, R2);
      if (!witness)
        throw std::runtime_error(
            "barrier_envelope: tangent exterior sphere construction failed");
      const hypgeo::HPoint& dp = witness->circle.hyp_center;
      for (std::size_t v = 0; v < mesh.vertex_count(); ++v) {
        const double rho = hypgeo::hyp_distance(mesh.point(v), dp);
        double wp = h;
        if (h <= 0)
          wp = 0;
        else if (rho < Rh_out)
          wp = std::min(h, prof_out->value(std::max(rho, R2)));
        chk.upper_margin = std::min(chk.upper_margin, wp - field.values[v]);
        chk.lower_margin = std::min(chk.lower_margin, field.values[v]);
      }
    } else {
      const auto witness = hypgeo::exterior_tangent_horocycle(spec.outer, s);
      if (!witness)
        throw std::runtime_error(
            "barrier_envelope: tangent exterior horocycle construction "
            "failed");
      const auto map = canonical_horocycle_map(
          spec.outer[s], witness->horocycle.asymptotic_point);
      for (std::size_t v = 0; v < mesh.vertex_count(); ++v) {
        const auto q = map(mesh.point(v));
        const double wp = std::min(h, clamped_level(q[0], q[1]));
        chk.upper_margin = std::min(chk.upper_margin, wp - field.values[v]);
        chk.lower_margin = std::min(chk.lower_margin, field.values[v]);
      }
      // The projected level-h horocycle must stay clear of the inner
      // curves; ln(sec h) <= delta is the certified reason.
      chk.horocycle_clear = horosurf::horocycle_gap(h) <= delta + 1e-12;
      const double rad = horosurf::HoroRegion::projected_radius(h);
      const auto cen = horosurf::HoroRegion::projected_center(h);
      for (int k = 0; k < 64 && chk.horocycle_clear; ++k) {
        const double a = 2.0 * kPi * k / 64;
        const auto back = map.inverse(cen[0] + rad * std::cos(a),
                                      cen[1] + rad * std::sin(a));
        if (back[0] * back[0] + back[1] * back[1] >= 1.0) continue;
        const hypgeo::HPoint q(back[0], back[1]);
        for (const auto& inner : spec.inners)
          if (inner.contains(q)) chk.horocycle_clear = false;
      }
      if (!chk.horocycle_clear) report.ok = false;
    }
    chk.ok = chk.horocycle_clear && chk.lower_margin >= -opts.tol &&
             chk.upper_margin >= -opts.tol;
    report.worst_margin = std::min(
        {report.worst_margin, chk.lower_margin, chk.upper_margin});
    if (!chk.ok) report.ok = false;
    report.checks.push_back(chk);
  }
  return report;
}

HeightField lower_envelope(const certify::DomainSpec& spec,
                           const certify::BoundaryData& data,
                           std::shared_ptr<const Mesh> mesh,
                           int points_per_curve) {
  const double h = data.inner_height;
  const double R1 = spec.conditions.inner_sphere_radius;
  HeightField out;
  out.mesh = mesh;
  out.values.assign(mesh->vertex_count(), 0.0);
  if (h > 0) {
    catenoid::CatenoidProfile prof(spec.n, R1, R1 + 4.0);
    const double Rh = catenoid::invert_profile(spec.n, R1, h);
    for (const auto& curve : spec.inners) {
      for (std::size_t s : spread_indices(curve.size(), points_per_curve)) {
        const auto witness = hypgeo::interior_tangent_circle(curve, s, R1);
        if (!witness) continue;
        const hypgeo::HPoint& cp = witness->circle.hyp_center;
        for (std::size_t v = 0; v < mesh->vertex_count(); ++v) {
          const double rho = hypgeo::hyp_distance(mesh->point(v), cp);
          if (rho < Rh) {
            const double vp = h - prof.value(std::max(rho, R1));
            out.values[v] = std::max(out.values[v], vp);
          }
        }
      }
    }
  }
  const auto bv = dirichlet_values(*mesh, data, spec.outer);
  for (std::size_t v = 0; v < mesh->vertex_count(); ++v)
    if (mesh->is_boundary(v)) out.values[v] = bv[v];
  return out;
}

}  // namespace hypermin::solver

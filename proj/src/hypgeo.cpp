#include "hypermin/hypgeo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hypermin/threads.hpp"

namespace hypermin::hypgeo {

namespace {

constexpr double kPi = 3.14159265358979323846;

double dot(const Vec& a, const Vec& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(const Vec& a) { return dot(a, a); }

struct P2 {
  double x, y;
};

P2 p2(const HPoint& p) { return {p.coords[0], p.coords[1]}; }
P2 p2(const Vec& v) { return {v[0], v[1]}; }

double dist2(P2 a, P2 b) {
  const double dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}

// Squared Euclidean distance from q to segment [a, b].
double seg_dist2(P2 q, P2 a, P2 b) {
  const double ex = b.x - a.x, ey = b.y - a.y;
  const double len2 = ex * ex + ey * ey;
  double t = len2 > 0 ? ((q.x - a.x) * ex + (q.y - a.y) * ey) / len2 : 0;
  t = std::clamp(t, 0.0, 1.0);
  const double px = a.x + t * ex - q.x, py = a.y + t * ey - q.y;
  return px * px + py * py;
}

bool segments_intersect(P2 a, P2 b, P2 c, P2 d) {
  auto orient = [](P2 p, P2 q, P2 r) {
    const double v = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    if (v > 0) return 1;
    if (v < 0) return -1;
    return 0;
  };
  const int o1 = orient(a, b, c), o2 = orient(a, b, d);
  const int o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  auto on = [](P2 p, P2 q, P2 r) {
    return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) &&
           std::min(p.y, q.y) <= r.y && r.y <= std::max(p.y, q.y);
  };
  if (o1 == 0 && on(a, b, c)) return true;
  if (o2 == 0 && on(a, b, d)) return true;
  if (o3 == 0 && on(c, d, a)) return true;
  if (o4 == 0 && on(c, d, b)) return true;
  return false;
}

// Golden-section minimizer for quasi-convex 1-D functions.
template <class F>
double golden_min(F&& f, double lo, double hi, int iters = 60) {
  constexpr double phi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int k = 0; k < iters; ++k) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? x1 : x2;
}

// Golden-section maximizer.
template <class F>
double golden_max(F&& f, double lo, double hi, int iters = 60) {
  return golden_min([&](double t) { return -f(t); }, lo, hi, iters);
}

}  // namespace

HPoint::HPoint(Vec c) : coords(std::move(c)) {
  if (coords.empty()) throw std::invalid_argument("HPoint: empty coordinates");
  if (norm2(coords) >= 1.0)
    throw std::invalid_argument("HPoint: point on or outside the unit sphere");
}

HPoint HPoint::origin(int n) { return HPoint(Vec(n, 0.0)); }

double HPoint::norm2() const { return hypgeo::norm2(coords); }
double HPoint::norm() const { return std::sqrt(norm2()); }

double conformal_factor(const HPoint& p) {
  const double f = (1.0 - p.norm2()) / 2.0;
  return f * f;
}

double hyp_distance(const HPoint& p, const HPoint& q) {
  if (p.dim() != q.dim())
    throw std::invalid_argument("hyp_distance: dimension mismatch");
  double d2 = 0;
  for (int i = 0; i < p.dim(); ++i) {
    const double d = p.coords[i] - q.coords[i];
    d2 += d * d;
  }
  const double denom = (1.0 - p.norm2()) * (1.0 - q.norm2());
  const double a = 2.0 * d2 / denom;
  // acosh(1 + a) written as log1p for accuracy near a = 0.
  return std::log1p(a + std::sqrt(a * (a + 2.0)));
}

Vec mobius_add(const Vec& a, const Vec& x) {
  const double ax = dot(a, x), a2 = norm2(a), x2 = norm2(x);
  const double denom = 1.0 + 2.0 * ax + a2 * x2;
  const double ca = (1.0 + 2.0 * ax + x2) / denom;
  const double cx = (1.0 - a2) / denom;
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = ca * a[i] + cx * x[i];
  return r;
}

HPoint geodesic_point(const HPoint& p, const Vec& dir, double dist) {
  const double s = std::tanh(dist / 2.0);
  const double dn = std::sqrt(norm2(dir));
  if (dn == 0) throw std::invalid_argument("geodesic_point: zero direction");
  Vec step(dir.size());
  for (std::size_t i = 0; i < dir.size(); ++i) step[i] = s * dir[i] / dn;
  return HPoint(mobius_add(p.coords, step));
}

HCircle hyp_circle(const HPoint& center, double radius) {
  if (!(radius > 0)) throw std::invalid_argument("hyp_circle: radius <= 0");
  HCircle c;
  c.hyp_center = center;
  c.hyp_radius = radius;
  const double m = center.norm();
  if (m == 0) {
    c.euc_center = Vec(center.dim(), 0.0);
    c.euc_radius = std::tanh(radius / 2.0);
    return c;
  }
  // The circle meets the diameter through the center at signed hyperbolic
  // distances d0 -+ radius from the origin.
  const double d0 = 2.0 * std::atanh(m);
  const double s1 = std::tanh((d0 - radius) / 2.0);
  const double s2 = std::tanh((d0 + radius) / 2.0);
  c.euc_center = Vec(center.dim());
  for (int i = 0; i < center.dim(); ++i)
    c.euc_center[i] = center.coords[i] / m * (s1 + s2) / 2.0;
  c.euc_radius = (s2 - s1) / 2.0;
  return c;
}

HCircle hcircle_from_euclidean(const Vec& euc_center, double euc_radius) {
  if (!(euc_radius > 0))
    throw std::invalid_argument("hcircle_from_euclidean: radius <= 0");
  const double m = std::sqrt(norm2(euc_center));
  if (m + euc_radius >= 1.0)
    throw std::invalid_argument(
        "hcircle_from_euclidean: circle not inside the unit ball");
  HCircle c;
  c.euc_center = euc_center;
  c.euc_radius = euc_radius;
  if (m == 0) {
    c.hyp_center = HPoint::origin(static_cast<int>(euc_center.size()));
    c.hyp_radius = 2.0 * std::atanh(euc_radius);
    return c;
  }
  const double t1 = 2.0 * std::atanh(m - euc_radius);
  const double t2 = 2.0 * std::atanh(m + euc_radius);
  c.hyp_radius = (t2 - t1) / 2.0;
  const double sc = std::tanh((t1 + t2) / 4.0);
  Vec hc(euc_center.size());
  for (std::size_t i = 0; i < euc_center.size(); ++i)
    hc[i] = euc_center[i] / m * sc;
  c.hyp_center = HPoint(std::move(hc));
  return c;
}

Horocycle horocycle_through(const HPoint& p, const Vec& xi) {
  if (p.dim() != 2 || xi.size() != 2)
    throw std::invalid_argument("horocycle_through: n = 2 only");
  const double xn = std::sqrt(norm2(xi));
  if (std::abs(xn - 1.0) > 1e-12)
    throw std::invalid_argument("horocycle_through: xi must be a unit vector");
  const double pxi = dot(p.coords, xi);
  double d2 = p.norm2() - 2.0 * pxi + 1.0;
  const double rho = d2 / (2.0 * (1.0 - pxi));
  Horocycle h;
  h.asymptotic_point = xi;
  h.euc_radius = rho;
  h.euc_center = {(1.0 - rho) * xi[0], (1.0 - rho) * xi[1]};
  return h;
}

SampledCurve::SampledCurve(std::vector<HPoint> pts, bool check_simple)
    : points(std::move(pts)) {
  if (points.size() < 16)
    throw std::invalid_argument("SampledCurve: fewer than 16 points");
  dim = points.front().dim();
  for (const auto& p : points)
    if (p.dim() != dim)
      throw std::invalid_argument("SampledCurve: mixed dimensions");
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = points[i];
    const auto& b = points[(i + 1) % n];
    double d2 = 0;
    for (int k = 0; k < dim; ++k) {
      const double d = a.coords[k] - b.coords[k];
      d2 += d * d;
    }
    if (d2 == 0)
      throw std::invalid_argument("SampledCurve: consecutive points coincide");
  }
  if (check_simple && dim == 2) {
    // Uniform grid over segments keeps the self-intersection sweep near
    // linear for the curve sizes used here.
    double xmin = 1, xmax = -1, ymin = 1, ymax = -1, maxlen = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const P2 a = p2(points[i]), b = p2(points[(i + 1) % n]);
      xmin = std::min({xmin, a.x});
      xmax = std::max({xmax, a.x});
      ymin = std::min({ymin, a.y});
      ymax = std::max({ymax, a.y});
      maxlen = std::max(maxlen, std::sqrt(dist2(a, b)));
    }
    const double cell = std::max(maxlen, 1e-12);
    const int gx = std::max(1, static_cast<int>((xmax - xmin) / cell) + 1);
    const int gy = std::max(1, static_cast<int>((ymax - ymin) / cell) + 1);
    std::vector<std::vector<int>> grid(static_cast<std::size_t>(gx) * gy);
    auto cell_of = [&](double x, double y) {
      int cx = std::clamp(static_cast<int>((x - xmin) / cell), 0, gx - 1);
      int cy = std::clamp(static_cast<int>((y - ymin) / cell), 0, gy - 1);
      return cy * gx + cx;
    };
    for (std::size_t i = 0; i < n; ++i) {
      const P2 a = p2(points[i]), b = p2(points[(i + 1) % n]);
      const int c1 = cell_of(a.x, a.y), c2 = cell_of(b.x, b.y);
      grid[c1].push_back(static_cast<int>(i));
      if (c2 != c1) grid[c2].push_back(static_cast<int>(i));
    }
    for (std::size_t i = 0; i < n; ++i) {
      const P2 a = p2(points[i]), b = p2(points[(i + 1) % n]);
      const int ci = cell_of(a.x, a.y);
      const int cx = ci % gx, cy = ci / gx;
      for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx) {
          const int nx = cx + dx, ny = cy + dy;
          if (nx < 0 || nx >= gx || ny < 0 || ny >= gy) continue;
          for (int j : grid[static_cast<std::size_t>(ny) * gx + nx]) {
            const auto ju = static_cast<std::size_t>(j);
            if (ju <= i) continue;
            // Adjacent segments share an endpoint by construction.
            if (ju == i + 1 || (i == 0 && ju == n - 1)) continue;
            const P2 c = p2(points[ju]), d = p2(points[(ju + 1) % n]);
            if (segments_intersect(a, b, c, d))
              throw std::invalid_argument(
                  "SampledCurve: curve is not simple (segments " +
                  std::to_string(i) + " and " + std::to_string(ju) +
                  " intersect)");
          }
        }
    }
  }
}

double SampledCurve::signed_area() const {
  double s = 0;
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    const P2 a = p2(points[i]), b = p2(points[(i + 1) % n]);
    s += a.x * b.y - b.x * a.y;
  }
  return s / 2.0;
}

bool SampledCurve::contains(const HPoint& p) const {
  const P2 q = p2(p);
  bool inside = false;
  const std::size_t n = points.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const P2 a = p2(points[i]), b = p2(points[j]);
    if ((a.y > q.y) != (b.y > q.y)) {
      const double xin = (b.x - a.x) * (q.y - a.y) / (b.y - a.y) + a.x;
      if (q.x < xin) inside = !inside;
    }
  }
  return inside;
}

double SampledCurve::chart_distance(const Vec& p) const {
  const P2 q = p2(p);
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i)
    best = std::min(best, seg_dist2(q, p2(points[i]), p2(points[(i + 1) % n])));
  return std::sqrt(best);
}

Vec SampledCurve::inward_normal(std::size_t i) const {
  const std::size_t n = points.size();
  const P2 prev = p2(points[(i + n - 1) % n]);
  const P2 next = p2(points[(i + 1) % n]);
  double tx = next.x - prev.x, ty = next.y - prev.y;
  const double tn = std::hypot(tx, ty);
  tx /= tn;
  ty /= tn;
  // Interior lies to the left of travel for a counterclockwise curve.
  const double s = signed_area() > 0 ? 1.0 : -1.0;
  return {-s * ty, s * tx};
}

namespace {

// Minimum hyperbolic distance between two chart segments, by alternating
// golden-section over the two parameters (hyperbolic balls are Euclidean
// disks, so the restriction to a segment is quasi-convex).
double segpair_min_dist(const HPoint& a0, const HPoint& a1, const HPoint& b0,
                        const HPoint& b1, double tol) {
  auto lerp = [](const HPoint& p, const HPoint& q, double t) {
    Vec r(p.coords.size());
    for (std::size_t i = 0; i < r.size(); ++i)
      r[i] = (1 - t) * p.coords[i] + t * q.coords[i];
    return HPoint(std::move(r));
  };
  double s = 0.5, t = 0.5;
  double prev = std::numeric_limits<double>::infinity();
  for (int round = 0; round < 40; ++round) {
    const HPoint bpt = lerp(b0, b1, t);
    s = golden_min(
        [&](double u) { return hyp_distance(lerp(a0, a1, u), bpt); }, 0, 1, 40);
    const HPoint apt = lerp(a0, a1, s);
    t = golden_min(
        [&](double u) { return hyp_distance(apt, lerp(b0, b1, u)); }, 0, 1, 40);
    const double d = hyp_distance(lerp(a0, a1, s), lerp(b0, b1, t));
    if (std::abs(prev - d) < tol) return d;
    prev = d;
  }
  return prev;
}

}  // namespace

double set_distance(const SampledCurve& a, const SampledCurve& b, double tol) {
  if (a.dim != b.dim)
    throw std::invalid_argument("set_distance: dimension mismatch");
  if (a.points.empty() || b.points.empty())
    throw std::invalid_argument("set_distance: empty curve");
  const std::size_t na = a.size(), nb = b.size();
  double best = std::numeric_limits<double>::infinity();
  std::size_t bi = 0, bj = 0;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      const double d = hyp_distance(a[i], b[j]);
      if (d < best) {
        best = d;
        bi = i;
        bj = j;
      }
    }
  // Refine over the four segment pairs adjacent to the minimizing samples.
  double refined = best;
  for (int da = -1; da <= 0; ++da)
    for (int db = -1; db <= 0; ++db) {
      const std::size_t i0 = (bi + na + da) % na, i1 = (i0 + 1) % na;
      const std::size_t j0 = (bj + nb + db) % nb, j1 = (j0 + 1) % nb;
      refined = std::min(
          refined, segpair_min_dist(a[i0], a[i1], b[j0], b[j1], tol));
    }
  return refined;
}

double curve_distance(const HPoint& p, const SampledCurve& c, double tol) {
  const std::size_t n = c.size();
  double best = std::numeric_limits<double>::infinity();
  std::size_t bi = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = hyp_distance(p, c[i]);
    if (d < best) {
      best = d;
      bi = i;
    }
  }
  auto lerp = [&](std::size_t i0, double t) {
    const auto& q0 = c[i0].coords;
    const auto& q1 = c[(i0 + 1) % n].coords;
    Vec r(q0.size());
    for (std::size_t k = 0; k < r.size(); ++k)
      r[k] = (1 - t) * q0[k] + t * q1[k];
    return HPoint(std::move(r));
  };
  for (int ds = -1; ds <= 0; ++ds) {
    const std::size_t i0 = (bi + n + ds) % n;
    const double t = golden_min(
        [&](double u) { return hyp_distance(p, lerp(i0, u)); }, 0, 1, 60);
    best = std::min(best, hyp_distance(p, lerp(i0, t)));
  }
  (void)tol;
  return best;
}

namespace {

// Containment margins for disk-vs-polygon tests. The scan visits edges in
// ring order around a hint index so the binding edge is found early, and
// abandons a candidate as soon as it cannot beat `give_up`.
struct PolyScan {
  const SampledCurve* curve;

  double min_edge_dist(P2 c, double give_up, std::size_t hint) const {
    const std::size_t n = curve->size();
    double best2 = std::numeric_limits<double>::infinity();
    const double give2 = give_up <= 0 ? -1.0 : give_up * give_up;
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t step = (k + 1) / 2;
      const std::size_t i =
          (k % 2 == 1) ? (hint + step) % n : (hint + n - step) % n;
      const P2 a = p2(curve->points[i]);
      const P2 b = p2(curve->points[(i + 1) % n]);
      best2 = std::min(best2, seg_dist2(c, a, b));
      if (best2 < give2) return std::sqrt(best2);
    }
    return std::sqrt(best2);
  }
};

// Margin of the interior candidate disk tangent at sample i in direction
// theta: distance from disk center to the polygon minus the disk radius.
// Nonnegative (within tolerance) means the closed disk fits inside.
double interior_margin(const SampledCurve& curve, const PolyScan& scan,
                       std::size_t i, double theta, double R, double give_up) {
  const HPoint& p = curve[i];
  const Vec dir{std::cos(theta), std::sin(theta)};
  HPoint center = geodesic_point(p, dir, R);
  if (!curve.contains(center)) return -std::numeric_limits<double>::infinity();
  const HCircle hc = hyp_circle(center, R);
  const double d = scan.min_edge_dist(p2(hc.euc_center),
                                      give_up + hc.euc_radius, i);
  return d - hc.euc_radius;
}

double exterior_margin(const SampledCurve& curve, const PolyScan& scan,
                       std::size_t i, double theta, double R, double give_up) {
  const HPoint& p = curve[i];
  const Vec dir{std::cos(theta), std::sin(theta)};
  HPoint center = geodesic_point(p, dir, R);
  if (curve.contains(center)) return -std::numeric_limits<double>::infinity();
  const HCircle hc = hyp_circle(center, R);
  const double d = scan.min_edge_dist(p2(hc.euc_center),
                                      give_up + hc.euc_radius, i);
  return d - hc.euc_radius;
}

double horocycle_margin(const SampledCurve& curve, const PolyScan& scan,
                        std::size_t i, double phi, double give_up) {
  const HPoint& p = curve[i];
  const Vec xi{std::cos(phi), std::sin(phi)};
  const double pxi = p.coords[0] * xi[0] + p.coords[1] * xi[1];
  if (pxi >= 1.0 - 1e-15) return -std::numeric_limits<double>::infinity();
  const Horocycle h = horocycle_through(p, xi);
  const HPoint center(h.euc_center[0], h.euc_center[1]);
  if (curve.contains(center)) return -std::numeric_limits<double>::infinity();
  const double d =
      scan.min_edge_dist(p2(h.euc_center), give_up + h.euc_radius, i);
  return d - h.euc_radius;
}

// Maximize margin(theta) over a 2*pi family: seeded candidate first, then a
// coarse sweep with golden refinement around the best bracket. The give-up
// floor passed to margin() only ever proves failure early, never success.
template <class MarginFn>
double search_direction(MarginFn&& margin, double seed, double tol) {
  double m = margin(seed, -tol);
  if (m >= 0) return m;
  constexpr int kCoarse = 64;
  double best = m, best_theta = seed;
  for (int k = 0; k < kCoarse; ++k) {
    const double theta = seed + 2.0 * kPi * k / kCoarse;
    const double v = margin(theta, best);
    if (v > best) {
      best = v;
      best_theta = theta;
      if (best >= 0) return best;
    }
  }
  const double span = 2.0 * kPi / kCoarse;
  const double t = golden_max(
      [&](double th) { return margin(th, -std::numeric_limits<double>::infinity()); },
      best_theta - span, best_theta + span, 48);
  return std::max(best, margin(t, -std::numeric_limits<double>::infinity()));
}

double normal_angle(const SampledCurve& curve, std::size_t i, bool inward) {
  const Vec nrm = curve.inward_normal(i);
  const double s = inward ? 1.0 : -1.0;
  return std::atan2(s * nrm[1], s * nrm[0]);
}

void require_predicate_curve(const SampledCurve& curve) {
  if (curve.dim != 2)
    throw std::invalid_argument("predicate checks support n = 2 curves only");
}

}  // namespace

PredicateReport interior_sphere_check(const SampledCurve& curve, double R,
                                      double tol) {
  require_predicate_curve(curve);
  if (!(R > 0)) throw std::invalid_argument("interior_sphere_check: R <= 0");
  const std::size_t n = curve.size();
  PredicateReport rep;
  rep.margins.resize(n);
  const PolyScan scan{&curve};
  threads::parallel_for(n, [&](std::size_t i) {
    const double seed = normal_angle(curve, i, true);
    rep.margins[i] = search_direction(
        [&](double th, double gu) {
          return interior_margin(curve, scan, i, th, R, gu);
        },
        seed, tol);
  });
  for (std::size_t i = 0; i < n; ++i)
    if (rep.margins[i] < -tol) {
      rep.ok = false;
      rep.failures.push_back(i);
    }
  return rep;
}

PredicateReport exterior_sphere_check(const SampledCurve& curve, double R,
                                      double tol) {
  require_predicate_curve(curve);
  const bool horo = (R == kInfiniteRadius);
  if (!horo && !(R > 0))
    throw std::invalid_argument(
        "exterior_sphere_check: R must be positive or kInfiniteRadius");
  const std::size_t n = curve.size();
  PredicateReport rep;
  rep.margins.resize(n);
  const PolyScan scan{&curve};
  threads::parallel_for(n, [&](std::size_t i) {
    double m;
    if (horo) {
      // Horocycle candidates are parameterized by the asymptotic point; the
      // outward normal ray gives the natural seed.
      const HPoint& p = curve[i];
      const Vec nrm = curve.inward_normal(i);
      const Vec out{-nrm[0], -nrm[1]};
      // Seed with the ideal endpoint of the outward ray from p.
      const double a = 1.0, b = 2.0 * (p[0] * out[0] + p[1] * out[1]);
      const double c = p.norm2() - 1.0;
      const double t = (-b + std::sqrt(b * b - 4 * a * c)) / 2.0;
      const double seed =
          std::atan2(p[1] + t * out[1], p[0] + t * out[0]);
      m = search_direction(
          [&](double phi, double gu) {
            return horocycle_margin(curve, scan, i, phi, gu);
          },
          seed, tol);
    } else {
      const double seed = normal_angle(curve, i, false);
      m = search_direction(
          [&](double th, double gu) {
            return exterior_margin(curve, scan, i, th, R, gu);
          },
          seed, tol);
    }
    rep.margins[i] = m;
  });
  for (std::size_t i = 0; i < n; ++i)
    if (rep.margins[i] < -tol) {
      rep.ok = false;
      rep.failures.push_back(i);
    }
  return rep;
}

GeodesicLine geodesic_through(const HPoint& p, double psi) {
  if (p.dim() != 2)
    throw std::invalid_argument("geodesic_through: n = 2 only");
  GeodesicLine g;
  const Vec v{std::cos(psi), std::sin(psi)};
  const Vec nv{-v[1], v[0]};
  const double pn = p[0] * nv[0] + p[1] * nv[1];
  const double p2n = p.norm2();
  if (std::abs(pn) < 1e-14 * (1.0 + p2n)) {
    g.is_diameter = true;
    g.direction = v;
    return g;
  }
  // Circle orthogonal to the unit circle: |m|^2 = 1 + rho^2 with center
  // m = p + rho * n along the normal.
  const double rho = (1.0 - p2n) / (2.0 * pn);
  g.radius = std::abs(rho);
  g.center = {p[0] + rho * nv[0], p[1] + rho * nv[1]};
  return g;
}

double geodesic_side(const GeodesicLine& g, const Vec& q) {
  if (g.is_diameter)
    return g.direction[0] * q[1] - g.direction[1] * q[0];
  const double dx = q[0] - g.center[0], dy = q[1] - g.center[1];
  return std::hypot(dx, dy) - g.radius;
}

PredicateReport convexity_check(const SampledCurve& curve, double tol) {
  require_predicate_curve(curve);
  const std::size_t n = curve.size();
  PredicateReport rep;
  rep.margins.resize(n);
  threads::parallel_for(n, [&](std::size_t i) {
    const HPoint& p = curve[i];
    // Support quality of the geodesic with tangent angle psi: best of the
    // two one-sided minima of the signed side over all samples.
    auto quality = [&](double psi, double give_up) {
      const GeodesicLine g = geodesic_through(p, psi);
      double lo = std::numeric_limits<double>::infinity();
      double hi = -std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t step = (k + 1) / 2;
        const std::size_t j =
            (k % 2 == 1) ? (i + step) % n : (i + n - step) % n;
        const double s = geodesic_side(g, curve[j].coords);
        lo = std::min(lo, s);
        hi = std::max(hi, s);
        if (std::max(lo, -hi) < give_up)
          return -std::numeric_limits<double>::infinity();
      }
      return std::max(lo, -hi);
    };
    const P2 prev = p2(curve[(i + n - 1) % n]);
    const P2 next = p2(curve[(i + 1) % n]);
    const double seed = std::atan2(next.y - prev.y, next.x - prev.x);
    double best = quality(seed, -std::numeric_limits<double>::infinity());
    if (best < 0) {
      constexpr int kCoarse = 96;
      double best_psi = seed;
      for (int k = 1; k < kCoarse; ++k) {
        const double psi = seed + kPi * k / kCoarse;
        const double v = quality(psi, best);
        if (v > best) {
          best = v;
          best_psi = psi;
          if (best >= 0) break;
        }
      }
      if (best < 0) {
        const double span = kPi / kCoarse;
        const double t = golden_max(
            [&](double ps) {
              return quality(ps, -std::numeric_limits<double>::infinity());
            },
            best_psi - span, best_psi + span, 48);
        best = std::max(
            best, quality(t, -std::numeric_limits<double>::infinity()));
      }
    }
    rep.margins[i] = best;
  });
  for (std::size_t i = 0; i < n; ++i)
    if (rep.margins[i] < -tol) {
      rep.ok = false;
      rep.failures.push_back(i);
    }
  return rep;
}

std::optional<TangentWitness> interior_tangent_circle(
    const SampledCurve& curve, std::size_t i, double R, double tol) {
  require_predicate_curve(curve);
  const PolyScan scan{&curve};
  const double seed = normal_angle(curve, i, true);
  auto margin = [&](double th) {
    return interior_margin(curve, scan, i, th, R,
                           -std::numeric_limits<double>::infinity());
  };
  // Full sweep: the witness feeds barrier constructions, so take the best
  // direction rather than the first admissible one.
  constexpr int kCoarse = 64;
  double best = margin(seed), best_theta = seed;
  for (int k = 1; k < kCoarse; ++k) {
    const double th = seed + 2.0 * kPi * k / kCoarse;
    const double v = margin(th);
    if (v > best) {
      best = v;
      best_theta = th;
    }
  }
  const double span = 2.0 * kPi / kCoarse;
  const double t = golden_max(margin, best_theta - span, best_theta + span, 60);
  if (margin(t) > best) {
    best = margin(t);
    best_theta = t;
  }
  if (best < -tol) return std::nullopt;
  const Vec dir{std::cos(best_theta), std::sin(best_theta)};
  TangentWitness w;
  w.circle = hyp_circle(geodesic_point(curve[i], dir, R), R);
  w.margin = best;
  return w;
}

std::optional<TangentWitness> exterior_tangent_circle(
    const SampledCurve& curve, std::size_t i, double R, double tol) {
  require_predicate_curve(curve);
  const PolyScan scan{&curve};
  const double seed = normal_angle(curve, i, false);
  auto margin = [&](double th) {
    return exterior_margin(curve, scan, i, th, R,
                           -std::numeric_limits<double>::infinity());
  };
  constexpr int kCoarse = 64;
  double best = margin(seed), best_theta = seed;
  for (int k = 1; k < kCoarse; ++k) {
    const double th = seed + 2.0 * kPi * k / kCoarse;
    const double v = margin(th);
    if (v > best) {
      best = v;
      best_theta = th;
    }
  }
  const double span = 2.0 * kPi / kCoarse;
  const double t = golden_max(margin, best_theta - span, best_theta + span, 60);
  if (margin(t) > best) {
    best = margin(t);
    best_theta = t;
  }
  if (best < -tol) return std::nullopt;
  const Vec dir{std::cos(best_theta), std::sin(best_theta)};
  TangentWitness w;
  w.circle = hyp_circle(geodesic_point(curve[i], dir, R), R);
  w.margin = best;
  return w;
}

std::optional<HoroWitness> exterior_tangent_horocycle(
    const SampledCurve& curve, std::size_t i, double tol) {
  require_predicate_curve(curve);
  const PolyScan scan{&curve};
  const HPoint& p = curve[i];
  const Vec nrm = curve.inward_normal(i);
  const Vec out{-nrm[0], -nrm[1]};
  const double b = 2.0 * (p[0] * out[0] + p[1] * out[1]);
  const double c = p.norm2() - 1.0;
  const double troot = (-b + std::sqrt(b * b - 4 * c)) / 2.0;
  const double seed = std::atan2(p[1] + troot * out[1], p[0] + troot * out[0]);
  auto margin = [&](double phi) {
    return horocycle_margin(curve, scan, i, phi,
                            -std::numeric_limits<double>::infinity());
  };
  constexpr int kCoarse = 64;
  double best = margin(seed), best_phi = seed;
  for (int k = 1; k < kCoarse; ++k) {
    const double phi = seed + 2.0 * kPi * k / kCoarse;
    const double v = margin(phi);
    if (v > best) {
      best = v;
      best_phi = phi;
    }
  }
  const double span = 2.0 * kPi / kCoarse;
  const double t = golden_max(margin, best_phi - span, best_phi + span, 60);
  if (margin(t) > best) {
    best = margin(t);
    best_phi = t;
  }
  if (best < -tol) return std::nullopt;
  HoroWitness w;
  w.horocycle = horocycle_through(p, Vec{std::cos(best_phi), std::sin(best_phi)});
  w.margin = best;
  return w;
}

}  // namespace hypermin::hypgeo

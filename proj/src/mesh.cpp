#include "hypermin/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace hypermin::solver {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kBallGuard = 1.0 - 1e-6;

double tri_area(const std::array<double, 2>& a, const std::array<double, 2>& b,
                const std::array<double, 2>& c) {
  return 0.5 * ((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]));
}
}  // namespace

double Mesh::triangle_area(std::size_t t) const {
  const auto& tr = triangles[t];
  return tri_area(vertices[tr[0]], vertices[tr[1]], vertices[tr[2]]);
}

MeshQuality mesh_quality(const Mesh& m) {
  MeshQuality q;
  q.min_area = std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t < m.triangles.size(); ++t) {
    const auto& tr = m.triangles[t];
    for (int k = 0; k < 3; ++k) {
      const auto& a = m.vertices[tr[k]];
      const auto& b = m.vertices[tr[(k + 1) % 3]];
      const auto& c = m.vertices[tr[(k + 2) % 3]];
      const double ux = b[0] - a[0], uy = b[1] - a[1];
      const double vx = c[0] - a[0], vy = c[1] - a[1];
      const double ang = std::atan2(std::abs(ux * vy - uy * vx),
                                    ux * vx + uy * vy) * 180.0 / kPi;
      if (ang > q.max_angle_deg) {
        q.max_angle_deg = ang;
        q.worst_triangle = t;
      }
      q.min_angle_deg = std::min(q.min_angle_deg, ang);
    }
    q.min_area = std::min(q.min_area, m.triangle_area(t));
  }
  return q;
}

void check_mesh(const Mesh& m, double max_angle_deg) {
  if (m.boundary_tag.size() != m.vertices.size())
    throw std::invalid_argument("mesh: tag array size mismatch");
  for (const auto& v : m.vertices)
    if (v[0] * v[0] + v[1] * v[1] > kBallGuard * kBallGuard)
      throw std::invalid_argument("mesh: vertex too close to the ideal boundary");
  for (std::size_t t = 0; t < m.triangles.size(); ++t) {
    for (int k = 0; k < 3; ++k) {
      const int v = m.triangles[t][k];
      if (v < 0 || static_cast<std::size_t>(v) >= m.vertices.size())
        throw std::invalid_argument("mesh: triangle index out of range");
    }
    if (m.triangle_area(t) <= 0)
      throw std::invalid_argument("mesh: non-positive triangle orientation");
  }
  // Conformity: every edge in at most two triangles; boundary edges must
  // join boundary-tagged vertices.
  std::map<std::pair<int, int>, int> edge_count;
  for (const auto& tr : m.triangles)
    for (int k = 0; k < 3; ++k) {
      int a = tr[k], b = tr[(k + 1) % 3];
      if (a > b) std::swap(a, b);
      ++edge_count[{a, b}];
    }
  for (const auto& [e, c] : edge_count) {
    if (c > 2) throw std::invalid_argument("mesh: non-conforming edge");
    if (c == 1) {
      if (m.boundary_tag[e.first] == kInterior ||
          m.boundary_tag[e.second] == kInterior)
        throw std::invalid_argument(
            "mesh: boundary edge touches an untagged vertex");
    }
  }
  const MeshQuality q = mesh_quality(m);
  if (q.max_angle_deg > max_angle_deg)
    throw std::invalid_argument("mesh: angle bound exceeded (" +
                                std::to_string(q.max_angle_deg) + " deg)");
}

namespace {

// Shared quad-strip triangulation for structured ring meshes.
void triangulate_rings(Mesh& m, int rings, int angular) {
  for (int j = 0; j < rings; ++j)
    for (int k = 0; k < angular; ++k) {
      const int k1 = (k + 1) % angular;
      const int a = j * angular + k;
      const int b = (j + 1) * angular + k;
      const int c = (j + 1) * angular + k1;
      const int d = j * angular + k1;
      m.triangles.push_back({a, b, c});
      m.triangles.push_back({a, c, d});
    }
}

}  // namespace

Mesh annulus_mesh(const hypgeo::HPoint& center, double rho_in, double rho_out,
                  int rings, int angular, double grade) {
  if (!(0 < rho_in && rho_in < rho_out))
    throw std::invalid_argument("annulus_mesh: need 0 < rho_in < rho_out");
  if (rings < 1 || angular < 3)
    throw std::invalid_argument("annulus_mesh: too few rings or angles");
  Mesh m;
  const bool centered = center.norm2() == 0;
  for (int j = 0; j <= rings; ++j) {
    const double t = std::pow(static_cast<double>(j) / rings, grade);
    const double rho = rho_in + (rho_out - rho_in) * t;
    const double re = std::tanh(rho / 2.0);
    for (int k = 0; k < angular; ++k) {
      const double a = 2.0 * kPi * k / angular;
      std::array<double, 2> p{re * std::cos(a), re * std::sin(a)};
      if (!centered) {
        const auto q = hypgeo::mobius_add(center.coords, {p[0], p[1]});
        p = {q[0], q[1]};
      }
      m.vertices.push_back(p);
      m.boundary_tag.push_back(j == 0 ? inner_tag(0)
                                      : (j == rings ? kOuter : kInterior));
    }
  }
  triangulate_rings(m, rings, angular);
  return m;
}

Mesh disk_mesh(const hypgeo::HPoint& center, double rho, int rings,
               int angular) {
  if (!(rho > 0)) throw std::invalid_argument("disk_mesh: rho <= 0");
  if (rings < 1 || angular < 3)
    throw std::invalid_argument("disk_mesh: too few rings or angles");
  Mesh m;
  const bool centered = center.norm2() == 0;
  auto place = [&](double x, double y) -> std::array<double, 2> {
    if (centered) return {x, y};
    const auto q = hypgeo::mobius_add(center.coords, {x, y});
    return {q[0], q[1]};
  };
  m.vertices.push_back(place(0, 0));
  m.boundary_tag.push_back(kInterior);
  for (int j = 1; j <= rings; ++j) {
    const double re = std::tanh(rho * j / rings / 2.0);
    for (int k = 0; k < angular; ++k) {
      const double a = 2.0 * kPi * k / angular;
      m.vertices.push_back(place(re * std::cos(a), re * std::sin(a)));
      m.boundary_tag.push_back(j == rings ? kOuter : kInterior);
    }
  }
  for (int k = 0; k < angular; ++k)
    m.triangles.push_back({0, 1 + k, 1 + (k + 1) % angular});
  for (int j = 1; j < rings; ++j)
    for (int k = 0; k < angular; ++k) {
      const int k1 = (k + 1) % angular;
      const int a = 1 + (j - 1) * angular + k;
      const int b = 1 + j * angular + k;
      const int c = 1 + j * angular + k1;
      const int d = 1 + (j - 1) * angular + k1;
      m.triangles.push_back({a, b, c});
      m.triangles.push_back({a, c, d});
    }
  return m;
}

Mesh band_mesh(double level, int nu, int ntheta, double theta_margin) {
  if (!(level > 0 && level < kPi / 2))
    throw std::invalid_argument("band_mesh: level out of (0, pi/2)");
  if (nu < 1 || ntheta < 3)
    throw std::invalid_argument("band_mesh: too few subdivisions");
  if (!(theta_margin > 0 && theta_margin < kPi / 2))
    throw std::invalid_argument("band_mesh: bad theta margin");
  Mesh m;
  const double th0 = kPi / 2 + theta_margin;
  const double th1 = 5 * kPi / 2 - theta_margin;
  for (int i = 0; i <= nu; ++i) {
    const double u = level * i / nu;
    for (int k = 0; k <= ntheta; ++k) {
      const double th = th0 + (th1 - th0) * k / ntheta;
      const double kap = 1.0 + std::cos(u);
      m.vertices.push_back(
          {std::cos(th) / kap, (std::cos(u) + std::sin(th)) / kap});
      const bool rim = i == 0 || i == nu || k == 0 || k == ntheta;
      m.boundary_tag.push_back(rim ? (i == nu && k > 0 && k < ntheta
                                          ? inner_tag(0)
                                          : kOuter)
                                   : kInterior);
    }
  }
  const int row = ntheta + 1;
  for (int i = 0; i < nu; ++i)
    for (int k = 0; k < ntheta; ++k) {
      const int a = i * row + k;
      const int b = i * row + k + 1;
      const int c = (i + 1) * row + k + 1;
      const int d = (i + 1) * row + k;
      // Orientation depends on the parameterization; pick by signed area.
      if (tri_area(m.vertices[a], m.vertices[b], m.vertices[c]) > 0) {
        m.triangles.push_back({a, b, c});
        m.triangles.push_back({a, c, d});
      } else {
        m.triangles.push_back({a, c, b});
        m.triangles.push_back({a, d, c});
      }
    }
  return m;
}

std::vector<std::size_t> boundary_vertices(const Mesh& m, int tag) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < m.vertex_count(); ++v)
    if (m.boundary_tag[v] == tag) out.push_back(v);
  return out;
}

}  // namespace hypermin::solver

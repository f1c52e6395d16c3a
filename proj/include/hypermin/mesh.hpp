#pragma once

// Conforming triangulations of chart domains (n = 2). Meshes live in the
// Euclidean coordinates of the disk; the metric enters the solver only
// through the conformal factor.

#include <array>
#include <string>
#include <vector>

#include "hypermin/hypgeo.hpp"

namespace hypermin::solver {

/// Per-vertex boundary tag: kInterior, kOuter, or inner_tag(i).
constexpr int kInterior = -1;
constexpr int kOuter = 0;
constexpr int inner_tag(int i) { return 1 + i; }

struct Mesh {
  std::vector<std::array<double, 2>> vertices;
  std::vector<std::array<int, 3>> triangles;  // counterclockwise
  std::vector<int> boundary_tag;

  std::size_t vertex_count() const { return vertices.size(); }
  std::size_t triangle_count() const { return triangles.size(); }
  bool is_boundary(std::size_t v) const { return boundary_tag[v] != kInterior; }
  hypgeo::HPoint point(std::size_t v) const {
    return hypgeo::HPoint(vertices[v][0], vertices[v][1]);
  }

  double triangle_area(std::size_t t) const;
};

struct MeshQuality {
  double max_angle_deg = 0;
  double min_angle_deg = 180;
  double min_area = 0;
  std::size_t worst_triangle = 0;
};

MeshQuality mesh_quality(const Mesh& m);

/// Conformity, orientation, ball guard (|x| <= 1 - 1e-6) and the angle
/// bound favoring the discrete maximum principle. Throws on violation.
void check_mesh(const Mesh& m, double max_angle_deg = 100.0);

/// Structured annulus between concentric hyperbolic circles. `grade` > 1
/// crowds the rings toward the inner boundary (ring j at relative position
/// (j/rings)^grade in hyperbolic radius), matching the sqrt behavior of
/// catenoid traces at the neck.
Mesh annulus_mesh(const hypgeo::HPoint& center, double rho_in, double rho_out,
                  int rings, int angular, double grade = 1.0);

/// Polar mesh of a hyperbolic disk.
Mesh disk_mesh(const hypgeo::HPoint& center, double rho, int rings,
               int angular);

/// Structured mesh of the horocycle band of the given level, pulled back
/// through the surface parameterization; theta_margin trims the cusp at the
/// shared asymptotic point.
Mesh band_mesh(double level, int nu, int ntheta, double theta_margin = 0.4);

/// Vertices on the ring tagged `tag`, in mesh order.
std::vector<std::size_t> boundary_vertices(const Mesh& m, int tag);

}  // namespace hypermin::solver

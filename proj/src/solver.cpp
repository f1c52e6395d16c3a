#include "hypermin/solver.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <algorithm>
#include <cmath>
#include <limits>

namespace hypermin::solver {

namespace {

struct TriGeom {
  double area;
  double gx[3], gy[3];  // P1 basis gradients
  double cx, cy;        // centroid
  double F;             // conformal factor at the centroid
};

TriGeom tri_geom(const Mesh& m, std::size_t t) {
  const auto& tr = m.triangles[t];
  const auto& a = m.vertices[tr[0]];
  const auto& b = m.vertices[tr[1]];
  const auto& c = m.vertices[tr[2]];
  TriGeom g;
  const double det =
      (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
  g.area = 0.5 * det;
  // grad phi_i = perp(opposite edge) / (2 area); e0 = c-b, e1 = a-c, e2 = b-a.
  g.gx[0] = -(c[1] - b[1]) / det;
  g.gy[0] = (c[0] - b[0]) / det;
  g.gx[1] = -(a[1] - c[1]) / det;
  g.gy[1] = (a[0] - c[0]) / det;
  g.gx[2] = -(b[1] - a[1]) / det;
  g.gy[2] = (b[0] - a[0]) / det;
  g.cx = (a[0] + b[0] + c[0]) / 3.0;
  g.cy = (a[1] + b[1] + c[1]) / 3.0;
  const double f = (1.0 - (g.cx * g.cx + g.cy * g.cy)) / 2.0;
  g.F = f * f;
  return g;
}

// One nonlinear problem restricted to `unknown` vertices; the rest of the
// field acts as Dirichlet data. Shared by the global solve and the
// ball-replacement patches.
class PatchProblem {
 public:
  PatchProblem(const Mesh& mesh, const std::vector<char>& unknown)
      : mesh_(mesh) {
    index_.assign(mesh.vertex_count(), -1);
    for (std::size_t v = 0; v < mesh.vertex_count(); ++v)
      if (unknown[v]) {
        index_[v] = static_cast<int>(dofs_);
        ++dofs_;
      }
    for (std::size_t t = 0; t < mesh.triangle_count(); ++t) {
      const auto& tr = mesh.triangles[t];
      if (unknown[tr[0]] || unknown[tr[1]] || unknown[tr[2]]) {
        tris_.push_back(t);
        geom_.push_back(tri_geom(mesh, t));
        if (geom_.back().area <= 0)
          throw std::invalid_argument("solver: degenerate triangle");
      }
    }
  }

  std::size_t dofs() const { return dofs_; }

  // Weak residual r_i = sum_T (grad u . grad phi_i)/tau |T| at unknowns.
  Eigen::VectorXd residual(const std::vector<double>& u) const {
    Eigen::VectorXd r = Eigen::VectorXd::Zero(dofs_);
    for (std::size_t k = 0; k < tris_.size(); ++k) {
      const auto& tr = mesh_.triangles[tris_[k]];
      const TriGeom& g = geom_[k];
      double ux = 0, uy = 0;
      for (int j = 0; j < 3; ++j) {
        ux += u[tr[j]] * g.gx[j];
        uy += u[tr[j]] * g.gy[j];
      }
      const double tau = std::sqrt(1.0 + g.F * (ux * ux + uy * uy));
      const double w = g.area / tau;
      for (int j = 0; j < 3; ++j) {
        const int row = index_[tr[j]];
        if (row >= 0) r[row] += w * (ux * g.gx[j] + uy * g.gy[j]);
      }
    }
    return r;
  }

  // Picard step: solve div(grad u_new / tau(u_old)) = 0.
  void picard_step(std::vector<double>& u) const {
    std::vector<Eigen::Triplet<double>> trip;
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(dofs_);
    for (std::size_t k = 0; k < tris_.size(); ++k) {
      const auto& tr = mesh_.triangles[tris_[k]];
      const TriGeom& g = geom_[k];
      double ux = 0, uy = 0;
      for (int j = 0; j < 3; ++j) {
        ux += u[tr[j]] * g.gx[j];
        uy += u[tr[j]] * g.gy[j];
      }
      const double tau = std::sqrt(1.0 + g.F * (ux * ux + uy * uy));
      const double w = g.area / tau;
      for (int i = 0; i < 3; ++i) {
        const int row = index_[tr[i]];
        if (row < 0) continue;
        for (int j = 0; j < 3; ++j) {
          const double kij = w * (g.gx[i] * g.gx[j] + g.gy[i] * g.gy[j]);
          const int col = index_[tr[j]];
          if (col >= 0)
            trip.emplace_back(row, col, kij);
          else
            rhs[row] -= kij * u[tr[j]];
        }
      }
    }
    Eigen::SparseMatrix<double> A(dofs_, dofs_);
    A.setFromTriplets(trip.begin(), trip.end());
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> chol(A);
    if (chol.info() != Eigen::Success)
      throw std::runtime_error("solver: Picard factorization failed");
    Eigen::VectorXd x = chol.solve(rhs);
    for (std::size_t v = 0; v < mesh_.vertex_count(); ++v)
      if (index_[v] >= 0) u[v] = x[index_[v]];
  }

  // Damped Newton step; returns the undamped update norm.
  double newton_step(std::vector<double>& u) const {
    std::vector<Eigen::Triplet<double>> trip;
    Eigen::VectorXd r = residual(u);
    for (std::size_t k = 0; k < tris_.size(); ++k) {
      const auto& tr = mesh_.triangles[tris_[k]];
      const TriGeom& g = geom_[k];
      double ux = 0, uy = 0;
      for (int j = 0; j < 3; ++j) {
        ux += u[tr[j]] * g.gx[j];
        uy += u[tr[j]] * g.gy[j];
      }
      const double tau2 = 1.0 + g.F * (ux * ux + uy * uy);
      const double tau = std::sqrt(tau2);
      // d/du [grad u / tau] = (I - F grad u grad u^T / tau^2) / tau
      const double s = g.F / (tau2 * tau);
      for (int i = 0; i < 3; ++i) {
        const int row = index_[tr[i]];
        if (row < 0) continue;
        for (int j = 0; j < 3; ++j) {
          const int col = index_[tr[j]];
          if (col < 0) continue;
          const double gij = g.gx[i] * g.gx[j] + g.gy[i] * g.gy[j];
          const double pij = (g.gx[i] * ux + g.gy[i] * uy) *
                             (g.gx[j] * ux + g.gy[j] * uy);
          trip.emplace_back(row, col, g.area * (gij / tau - s * pij));
        }
      }
    }
    Eigen::SparseMatrix<double> A(dofs_, dofs_);
    A.setFromTriplets(trip.begin(), trip.end());
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> chol(A);
    if (chol.info() != Eigen::Success)
      throw std::runtime_error("solver: Newton factorization failed");
    Eigen::VectorXd d = chol.solve(-r);

    const double rnorm = r.lpNorm<Eigen::Infinity>();
    std::vector<double> trial = u;
    double step = 1.0;
    for (int halving = 0; halving < 30; ++halving) {
      for (std::size_t v = 0; v < mesh_.vertex_count(); ++v)
        if (index_[v] >= 0) trial[v] = u[v] + step * d[index_[v]];
      if (residual(trial).lpNorm<Eigen::Infinity>() <= rnorm || rnorm == 0)
        break;
      step /= 2;
    }
    u = trial;
    return d.lpNorm<Eigen::Infinity>() * step;
  }

  double residual_norm(const std::vector<double>& u) const {
    return residual(u).lpNorm<Eigen::Infinity>();
  }

  // Nonlinear solve on the patch, writing into u.
  void solve(std::vector<double>& u, const SolveOptions& opts,
             SolveInfo* info) const {
    if (dofs_ == 0) return;
    SolveInfo local;
    double update = std::numeric_limits<double>::infinity();
    for (int it = 0; it < opts.max_picard && update > opts.picard_handoff;
         ++it) {
      std::vector<double> prev = u;
      picard_step(u);
      update = 0;
      for (std::size_t v = 0; v < u.size(); ++v)
        update = std::max(update, std::abs(u[v] - prev[v]));
      ++local.picard_iters;
      local.residual_history.push_back(residual_norm(u));
    }
    for (int it = 0; it < opts.max_newton; ++it) {
      update = newton_step(u);
      ++local.newton_iters;
      local.residual_history.push_back(residual_norm(u));
      if (update < opts.update_tol) break;
    }
    local.final_update = update;
    local.final_residual = residual_norm(u);
    if (update > opts.update_tol * 10 ||
        !(local.final_residual < opts.residual_tol))
      throw SolveError(
          "solver: no convergence (update " + std::to_string(update) +
              ", residual " + std::to_string(local.final_residual) + ")",
          local.residual_history);
    if (info) *info = local;
  }

 private:
  const Mesh& mesh_;
  std::vector<int> index_;
  std::size_t dofs_ = 0;
  std::vector<std::size_t> tris_;
  std::vector<TriGeom> geom_;
};

}  // namespace

std::vector<double> dirichlet_values(const Mesh& mesh,
                                     const certify::BoundaryData& data) {
  if (data.outer_samples)
    throw std::invalid_argument(
        "dirichlet_values: sampled outer data needs the outer curve overload");
  std::vector<double> bv(mesh.vertex_count(), 0.0);
  for (std::size_t v = 0; v < mesh.vertex_count(); ++v) {
    if (mesh.boundary_tag[v] == kOuter)
      bv[v] = data.outer_constant;
    else if (mesh.boundary_tag[v] > 0)
      bv[v] = data.inner_height;
  }
  return bv;
}

std::vector<double> dirichlet_values(const Mesh& mesh,
                                     const certify::BoundaryData& data,
                                     const hypgeo::SampledCurve& outer) {
  if (!data.outer_samples) return dirichlet_values(mesh, data);
  const auto& f = *data.outer_samples;
  if (f.size() != outer.size())
    throw std::invalid_argument(
        "dirichlet_values: outer samples must align with the outer curve");
  std::vector<double> bv(mesh.vertex_count(), 0.0);
  const std::size_t n = outer.size();
  for (std::size_t v = 0; v < mesh.vertex_count(); ++v) {
    if (mesh.boundary_tag[v] > 0) {
      bv[v] = data.inner_height;
    } else if (mesh.boundary_tag[v] == kOuter) {
      // Project onto the closest curve segment and interpolate f linearly.
      const auto& p = mesh.vertices[v];
      double best = std::numeric_limits<double>::infinity();
      std::size_t bi = 0;
      double bt = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const auto& a = outer[i].coords;
        const auto& b = outer[(i + 1) % n].coords;
        const double ex = b[0] - a[0], ey = b[1] - a[1];
        const double len2 = ex * ex + ey * ey;
        double t = ((p[0] - a[0]) * ex + (p[1] - a[1]) * ey) / len2;
        t = std::clamp(t, 0.0, 1.0);
        const double dx = a[0] + t * ex - p[0], dy = a[1] + t * ey - p[1];
        const double d2 = dx * dx + dy * dy;
        if (d2 < best) {
          best = d2;
          bi = i;
          bt = t;
        }
      }
      bv[v] = (1.0 - bt) * f[bi] + bt * f[(bi + 1) % n];
    }
  }
  return bv;
}

HeightField solve_dirichlet_2d(std::shared_ptr<const Mesh> mesh,
                               const std::vector<double>& boundary_values,
                               const SolveOptions& opts, SolveInfo* info) {
  check_mesh(*mesh);
  if (boundary_values.size() != mesh->vertex_count())
    throw std::invalid_argument("solve_dirichlet_2d: boundary vector size");
  HeightField field;
  field.mesh = mesh;
  field.values.assign(mesh->vertex_count(), 0.0);

  double bmin = std::numeric_limits<double>::infinity(), bmax = -bmin;
  for (std::size_t v = 0; v < mesh->vertex_count(); ++v)
    if (mesh->is_boundary(v)) {
      bmin = std::min(bmin, boundary_values[v]);
      bmax = std::max(bmax, boundary_values[v]);
    }
  if (!std::isfinite(bmin))
    throw std::invalid_argument("solve_dirichlet_2d: mesh has no boundary");
  const double start = opts.initial_value.value_or(0.5 * (bmin + bmax));

  std::vector<char> unknown(mesh->vertex_count(), 0);
  for (std::size_t v = 0; v < mesh->vertex_count(); ++v) {
    if (mesh->is_boundary(v)) {
      field.values[v] = boundary_values[v];
    } else {
      field.values[v] = start;
      unknown[v] = 1;
    }
  }
  PatchProblem problem(*mesh, unknown);
  problem.solve(field.values, opts, info);
  return field;
}

HeightField solve_dirichlet_2d(std::shared_ptr<const Mesh> mesh,
                               const certify::BoundaryData& data,
                               const SolveOptions& opts, SolveInfo* info) {
  return solve_dirichlet_2d(mesh, dirichlet_values(*mesh, data), opts, info);
}

ResidualReport residual_qh(const HeightField& field, double H) {
  const Mesh& m = *field.mesh;
  const int n = 2;  // chart dimension; the drift term vanishes identically
  ResidualReport rep;
  rep.vertex_residual.assign(m.vertex_count(), 0.0);
  std::vector<double> mass(m.vertex_count(), 0.0);
  std::vector<double> acc(m.vertex_count(), 0.0);
  for (std::size_t t = 0; t < m.triangle_count(); ++t) {
    const TriGeom g = tri_geom(m, t);
    if (g.area <= 0)
      throw std::invalid_argument("residual_qh: degenerate triangle");
    const auto& tr = m.triangles[t];
    double ux = 0, uy = 0;
    for (int j = 0; j < 3; ++j) {
      ux += field.values[tr[j]] * g.gx[j];
      uy += field.values[tr[j]] * g.gy[j];
    }
    const double tau = std::sqrt(1.0 + g.F * (ux * ux + uy * uy));
    const double drift = (n - 2) * (g.cx * ux + g.cy * uy) /
                         (tau * std::sqrt(g.F));
    const double curv = n * H / g.F;
    for (int j = 0; j < 3; ++j) {
      const int v = tr[j];
      // Weak divergence plus the lumped lower-order terms.
      acc[v] += -(ux * g.gx[j] + uy * g.gy[j]) / tau * g.area +
                (drift - curv) * g.area / 3.0;
      mass[v] += g.area / 3.0;
    }
  }
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    if (m.is_boundary(v)) continue;
    rep.vertex_residual[v] = acc[v] / mass[v];
    rep.max_norm = std::max(rep.max_norm, std::abs(rep.vertex_residual[v]));
  }
  return rep;
}

MaxPrincipleReport verify_max_principle(const HeightField& u1,
                                        const HeightField& u2, double tol) {
  if (u1.mesh.get() != u2.mesh.get())
    throw std::invalid_argument("verify_max_principle: mesh mismatch");
  const Mesh& m = *u1.mesh;
  for (std::size_t v = 0; v < m.vertex_count(); ++v)
    if (m.is_boundary(v) && u1.values[v] > u2.values[v] + 1e-12)
      throw std::invalid_argument(
          "verify_max_principle: boundary traces are not ordered");
  MaxPrincipleReport rep;
  rep.worst_violation = -std::numeric_limits<double>::infinity();
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    const double gap = u1.values[v] - u2.values[v];
    if (gap > rep.worst_violation) {
      rep.worst_violation = gap;
      rep.worst_vertex = v;
    }
  }
  rep.ok = rep.worst_violation <= tol;
  return rep;
}

double RadialProfileSolution::value(double rho) const {
  if (kind == Kind::Slice) return h_in;
  return sign * catenoid::profile_value(n, neck, std::max(rho, neck)) + offset;
}

RadialProfileSolution solve_radial(int n, double rho_in, double rho_out,
                                   double h_in, double h_out) {
  if (!(0 < rho_in && rho_in < rho_out))
    throw std::invalid_argument("solve_radial: need 0 < rho_in < rho_out");
  if (!std::isfinite(h_in) || !std::isfinite(h_out))
    throw std::invalid_argument("solve_radial: non-finite data");
  RadialProfileSolution sol;
  sol.n = n;
  sol.rho_in = rho_in;
  sol.rho_out = rho_out;
  sol.h_in = h_in;
  sol.h_out = h_out;
  const double diff = h_out - h_in;
  if (diff == 0) {
    sol.kind = RadialProfileSolution::Kind::Slice;
    return sol;
  }
  // Height gain over the annulus is increasing in the neck radius; the neck
  // at the inner boundary realizes the supremum.
  auto gain = [&](double r) {
    return catenoid::profile_value(n, r, rho_out) -
           catenoid::profile_value(n, r, rho_in);
  };
  const double sup = gain(rho_in);
  const double target = std::abs(diff);
  if (target > sup)
    throw NoAdmissibleNeck(
        "solve_radial: |h_out - h_in| = " + std::to_string(target) +
            " exceeds the largest rotational height gain " +
            std::to_string(sup) + " (NO_ADMISSIBLE_NECK)",
        sup);
  sol.kind = RadialProfileSolution::Kind::Catenoid;
  sol.sign = diff > 0 ? 1 : -1;
  double lo = 0.0, hi = rho_in;  // gain -> 0 as the neck shrinks
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double gm = gain(mid);
    if (std::abs(gm - target) < 1e-12) {
      lo = hi = mid;
      break;
    }
    (gm < target ? lo : hi) = mid;
    if (hi - lo < 1e-14 * rho_in) break;
  }
  sol.neck = 0.5 * (lo + hi);
  sol.offset =
      h_in - sol.sign * catenoid::profile_value(n, sol.neck, rho_in);
  return sol;
}

// ---- local replacement and the Perron sweep --------------------------------

namespace {

// Hyperbolic distance from a point to a chart segment (quasi-convex along
// the segment since metric balls are Euclidean disks).
double hyp_seg_dist(const hypgeo::HPoint& p, const std::array<double, 2>& a,
                    const std::array<double, 2>& b) {
  auto at = [&](double t) {
    return hypgeo::HPoint((1 - t) * a[0] + t * b[0],
                          (1 - t) * a[1] + t * b[1]);
  };
  double lo = 0, hi = 1;
  for (int it = 0; it < 60; ++it) {
    const double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
    if (hypgeo::hyp_distance(p, at(m1)) < hypgeo::hyp_distance(p, at(m2)))
      hi = m2;
    else
      lo = m1;
  }
  return hypgeo::hyp_distance(p, at(0.5 * (lo + hi)));
}

void require_ball_in_domain(const Mesh& m, const hypgeo::HPoint& center,
                            double radius) {
  // The center must lie in some triangle.
  bool inside = false;
  for (std::size_t t = 0; t < m.triangle_count() && !inside; ++t) {
    const auto& tr = m.triangles[t];
    const auto& a = m.vertices[tr[0]];
    const auto& b = m.vertices[tr[1]];
    const auto& c = m.vertices[tr[2]];
    auto side = [&](const std::array<double, 2>& u,
                    const std::array<double, 2>& v) {
      return (v[0] - u[0]) * (center[1] - u[1]) -
             (v[1] - u[1]) * (center[0] - u[0]);
    };
    inside = side(a, b) >= -1e-14 && side(b, c) >= -1e-14 &&
             side(c, a) >= -1e-14;
  }
  if (!inside)
    throw std::invalid_argument("local_replacement: center outside the mesh");
  // The ball may touch the boundary but not cross it.
  std::map<std::pair<int, int>, int> edge_count;
  for (const auto& tr : m.triangles)
    for (int k = 0; k < 3; ++k) {
      int a = tr[k], b = tr[(k + 1) % 3];
      if (a > b) std::swap(a, b);
      ++edge_count[{a, b}];
    }
  for (const auto& [e, c] : edge_count) {
    if (c != 1) continue;
    if (hyp_seg_dist(center, m.vertices[e.first], m.vertices[e.second]) <
        radius - 1e-9)
      throw std::invalid_argument(
          "local_replacement: ball crosses the domain boundary");
  }
}

std::vector<char> ball_unknowns(const Mesh& m, const hypgeo::HPoint& center,
                                double radius) {
  std::vector<char> unknown(m.vertex_count(), 0);
  for (std::size_t v = 0; v < m.vertex_count(); ++v)
    if (!m.is_boundary(v) &&
        hypgeo::hyp_distance(m.point(v), center) < radius)
      unknown[v] = 1;
  return unknown;
}

}  // namespace

HeightField local_replacement(const HeightField& field,
                              const hypgeo::HPoint& center, double radius) {
  if (!(radius > 0))
    throw std::invalid_argument("local_replacement: radius <= 0");
  const Mesh& m = *field.mesh;
  require_ball_in_domain(m, center, radius);
  HeightField out = field;
  const auto unknown = ball_unknowns(m, center, radius);
  PatchProblem patch(m, unknown);
  if (patch.dofs() == 0) return out;
  SolveOptions opts;
  patch.solve(out.values, opts, nullptr);
  return out;
}

std::vector<Ball> annulus_ball_cover(const hypgeo::HPoint& center,
                                     double rho_in, double rho_out, int rings,
                                     int per_ring) {
  if (rings < 1 || per_ring < 1)
    throw std::invalid_argument("annulus_ball_cover: bad counts");
  std::vector<Ball> cover;
  constexpr double kPi = 3.14159265358979323846;
  for (int j = 0; j < rings; ++j) {
    const double rho = rho_in + (rho_out - rho_in) * (j + 0.5) / rings;
    // Tangent to the nearest boundary circle, with a floor that keeps the
    // ball overlapping its ring neighbors.
    const double radius = std::min(rho - rho_in, rho_out - rho);
    for (int k = 0; k < per_ring; ++k) {
      const double a = 2.0 * kPi * (k + 0.5 * (j % 2)) / per_ring;
      const double re = std::tanh(rho / 2.0);
      std::array<double, 2> p{re * std::cos(a), re * std::sin(a)};
      if (center.norm2() != 0) {
        const auto q = hypgeo::mobius_add(center.coords, {p[0], p[1]});
        p = {q[0], q[1]};
      }
      cover.push_back({hypgeo::HPoint(p[0], p[1]), radius});
    }
  }
  return cover;
}

PerronResult perron_sweep(std::shared_ptr<const Mesh> mesh,
                          const std::vector<double>& boundary_values,
                          const std::vector<Ball>& cover,
                          const PerronOptions& opts, const HeightField* start) {
  const Mesh& m = *mesh;
  check_mesh(m);
  if (cover.empty())
    throw std::invalid_argument("perron_sweep: empty ball cover");

  PerronResult res;
  res.field.mesh = mesh;
  if (start) {
    if (start->mesh.get() != mesh.get())
      throw std::invalid_argument("perron_sweep: start field mesh mismatch");
    res.field.values = start->values;
  } else {
    double bmin = std::numeric_limits<double>::infinity();
    for (std::size_t v = 0; v < m.vertex_count(); ++v)
      if (m.is_boundary(v)) bmin = std::min(bmin, boundary_values[v]);
    res.field.values.assign(m.vertex_count(), bmin);
  }
  for (std::size_t v = 0; v < m.vertex_count(); ++v)
    if (m.is_boundary(v)) res.field.values[v] = boundary_values[v];

  // Precompute patches; every interior vertex must be covered.
  std::vector<PatchProblem> patches;
  std::vector<char> covered(m.vertex_count(), 0);
  for (const auto& ball : cover) {
    require_ball_in_domain(m, ball.center, ball.radius);
    auto unknown = ball_unknowns(m, ball.center, ball.radius);
    for (std::size_t v = 0; v < m.vertex_count(); ++v)
      if (unknown[v]) covered[v] = 1;
    patches.emplace_back(m, unknown);
  }
  for (std::size_t v = 0; v < m.vertex_count(); ++v)
    if (!m.is_boundary(v) && !covered[v])
      throw std::invalid_argument(
          "perron_sweep: ball cover misses interior vertex " +
          std::to_string(v));

  SolveOptions patch_opts;
  res.min_monotone_gap = 0;
  for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
    const std::vector<double> before = res.field.values;
    for (const auto& patch : patches)
      patch.solve(res.field.values, patch_opts, nullptr);
    double change = 0;
    for (std::size_t v = 0; v < m.vertex_count(); ++v) {
      const double d = res.field.values[v] - before[v];
      change = std::max(change, std::abs(d));
      res.min_monotone_gap = std::min(res.min_monotone_gap, d);
    }
    res.sweep_changes.push_back(change);
    ++res.sweeps;
    if (change < opts.sweep_tol) return res;
  }
  throw SolveError("perron_sweep: sweep cap exceeded", res.sweep_changes);
}

}  // namespace hypermin::solver

#pragma once

// Numerical solution and verification of the minimal-graph Dirichlet
// problem Q_0 u = 0 in the chart of the disk: Picard/Newton solver on P1
// elements, rotational reduction in any dimension, residual evaluation for
// Q_H, maximum-principle and barrier verification, and the ball-replacement
// (Perron) sweep.

#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hypermin/catenoid.hpp"
#include "hypermin/certify.hpp"
#include "hypermin/mesh.hpp"

namespace hypermin::solver {

struct HeightField {
  std::shared_ptr<const Mesh> mesh;
  std::vector<double> values;

  double operator[](std::size_t v) const { return values[v]; }
};

struct SolveOptions {
  int max_picard = 60;
  int max_newton = 60;
  double picard_handoff = 1e-3;  // switch to Newton below this update size
  double update_tol = 1e-10;
  double residual_tol = 1e-8;
  std::optional<double> initial_value;  // default: mean of boundary data
};

struct SolveInfo {
  int picard_iters = 0;
  int newton_iters = 0;
  std::vector<double> residual_history;  // max |Q_0| per nonlinear iteration
  double final_update = 0;
  double final_residual = 0;
};

class SolveError : public std::runtime_error {
 public:
  SolveError(const std::string& what, std::vector<double> history)
      : std::runtime_error(what), residual_history(std::move(history)) {}
  std::vector<double> residual_history;
};

/// Dirichlet values resolved per boundary tag onto mesh vertices; entries at
/// interior vertices are ignored.
std::vector<double> dirichlet_values(const Mesh& mesh,
                                     const certify::BoundaryData& data);
/// Variant interpolating sampled outer data along the outer curve.
std::vector<double> dirichlet_values(const Mesh& mesh,
                                     const certify::BoundaryData& data,
                                     const hypgeo::SampledCurve& outer);

HeightField solve_dirichlet_2d(std::shared_ptr<const Mesh> mesh,
                               const std::vector<double>& boundary_values,
                               const SolveOptions& opts = {},
                               SolveInfo* info = nullptr);
HeightField solve_dirichlet_2d(std::shared_ptr<const Mesh> mesh,
                               const certify::BoundaryData& data,
                               const SolveOptions& opts = {},
                               SolveInfo* info = nullptr);

struct ResidualReport {
  std::vector<double> vertex_residual;  // zero at boundary vertices
  double max_norm = 0;
};

/// Lumped P1 evaluation of Q_H at interior vertices.
ResidualReport residual_qh(const HeightField& field, double H);

struct MaxPrincipleReport {
  bool ok = true;
  double worst_violation = 0;  // max(u1 - u2), positive means violation
  std::size_t worst_vertex = 0;
};

MaxPrincipleReport verify_max_principle(const HeightField& u1,
                                        const HeightField& u2,
                                        double tol = 1e-6);

// ---- rotational reduction -------------------------------------------------

struct RadialProfileSolution {
  int n = 2;
  double rho_in = 0, rho_out = 0;
  double h_in = 0, h_out = 0;
  enum class Kind { Slice, Catenoid } kind = Kind::Slice;
  double neck = 0;
  int sign = 1;
  double offset = 0;

  double value(double rho) const;
};

class NoAdmissibleNeck : public std::runtime_error {
 public:
  NoAdmissibleNeck(const std::string& what, double supremum)
      : std::runtime_error(what), supremum(supremum) {}
  double supremum;  // largest reachable |h_out - h_in| over the family
};

RadialProfileSolution solve_radial(int n, double rho_in, double rho_out,
                                   double h_in, double h_out);

// ---- barrier verification ---------------------------------------------------

struct BarrierOptions {
  int points_per_curve = 32;
  double tol = 1e-6;
};

struct BarrierPointCheck {
  int curve = -1;  // -1: outer, i >= 0: inner curve i
  std::size_t sample_index = 0;
  double lower_margin = 0;  // min over vertices of u - v_p
  double upper_margin = 0;  // min over vertices of w_p - u
  bool horocycle_clear = true;  // horosphere branch: shifted horocycle avoids inners
  bool ok = true;
};

struct BarrierReport {
  bool ok = true;
  double worst_margin = 0;
  std::vector<BarrierPointCheck> checks;
  certify::Certificate certificate;
};

/// Sandwich check v_p <= u <= w_p against the sub/supersolutions built from
/// tangent catenoid pieces (and the horocycle-foliated graph when the outer
/// condition is the horosphere one). The configuration must certify EXISTS.
BarrierReport barrier_envelope(const certify::DomainSpec& spec,
                               const certify::BoundaryData& data,
                               const HeightField& field,
                               const BarrierOptions& opts = {});

/// Pointwise maximum of the inner-curve subsolutions over a sample of
/// tangency points; boundary vertices carry the Dirichlet data.
HeightField lower_envelope(const certify::DomainSpec& spec,
                           const certify::BoundaryData& data,
                           std::shared_ptr<const Mesh> mesh,
                           int points_per_curve = 16);

// ---- local replacement and the Perron sweep -------------------------------

struct Ball {
  hypgeo::HPoint center;
  double radius = 0;
};

/// Re-solves the problem on the submesh inside the ball with trace data
/// from the field, leaving the exterior untouched (the operator M_U).
HeightField local_replacement(const HeightField& field,
                              const hypgeo::HPoint& center, double radius);

std::vector<Ball> annulus_ball_cover(const hypgeo::HPoint& center,
                                     double rho_in, double rho_out, int rings,
                                     int per_ring);

struct PerronOptions {
  int max_sweeps = 2000;
  double sweep_tol = 1e-8;
};

struct PerronResult {
  HeightField field;
  std::vector<double> sweep_changes;
  double min_monotone_gap = 0;  // most negative vertexwise decrease seen
  int sweeps = 0;
};

/// Cyclic ball-replacement sweep from a starting subsolution (default: the
/// constant at the minimum boundary value). Iterates are nondecreasing and
/// converge to the discrete solution.
PerronResult perron_sweep(std::shared_ptr<const Mesh> mesh,
                          const std::vector<double>& boundary_values,
                          const std::vector<Ball>& cover,
                          const PerronOptions& opts = {},
                          const HeightField* start = nullptr);

}  // namespace hypermin::solver

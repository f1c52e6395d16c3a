#pragma once

// Threshold arithmetic and existence / non-existence certificates for
// compact minimal vertical graphs over multi-boundary domains of the slice.
// The existence theorems are sufficient conditions and the two-slice height
// criterion is a necessary one; everything in between is INCONCLUSIVE.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hypermin/hypgeo.hpp"

namespace hypermin::certify {

enum class OuterCondition { Finite, Horosphere, Convex };

struct DeclaredConditions {
  double inner_sphere_radius = 0;  // interior sphere radius for every inner curve
  OuterCondition outer = OuterCondition::Finite;
  double outer_sphere_radius = 0;  // exterior sphere radius, Finite case
  std::optional<double> declared_delta;  // cross-checked against the curves
};

struct DomainSpec {
  int n = 2;
  hypgeo::SampledCurve outer;
  std::vector<hypgeo::SampledCurve> inners;
  DeclaredConditions conditions;
};

/// Containment and pairwise-disjointness of the inner curves, sampled in
/// the chart. Throws std::invalid_argument on violation.
void validate_domain(const DomainSpec& spec, double tol = 1e-8);

struct BoundaryData {
  double inner_height = 0;   // h, constant on every inner curve
  double outer_constant = 0; // used when no sampled values are given
  /// Sampled f on the outer curve, aligned with its sample points.
  std::optional<std::vector<double>> outer_samples;

  double outer_min() const;
  double outer_max() const;
};

enum class Verdict { Exists, NotExists, Inconclusive };

std::string to_string(Verdict v);

struct ChecklistItem {
  std::string hypothesis;
  bool pass = false;
  std::string witness;
};

struct Thresholds {
  std::optional<double> delta;
  std::optional<double> alpha1;
  std::optional<double> alpha2;
  std::optional<double> alpha;
};

struct Certificate {
  Verdict verdict = Verdict::Inconclusive;
  Thresholds thresholds;
  std::vector<ChecklistItem> checklist;
  /// (r, half_height) pairs backing the non-existence criterion.
  std::vector<std::array<double, 2>> evidence_grid;

  bool all_passed() const;
};

/// alpha_1 = g_{R1}(R1 + delta).
double alpha1(int n, double R1, double delta);

/// alpha_2 = g_{R2}(R2 + delta) for a finite exterior radius, or
/// arcsec(e^delta) = arccos(e^-delta) for the horosphere condition (n = 2).
double alpha2(int n, OuterCondition cond, double R2, double delta);

Certificate certify_theorem1(const DomainSpec& spec, const BoundaryData& data);
Certificate certify_theorem2(const DomainSpec& spec, const BoundaryData& data);

/// Two-slice configuration with the upper boundary projecting inside the
/// lower one: no graph exists once h >= pi/(2n-2).
Certificate certify_nonexistence(int n, double h);

}  // namespace hypermin::certify

#include "hypermin/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "hypermin/catenoid.hpp"

namespace hypermin::certify {

namespace {
constexpr double kPi = 3.14159265358979323846;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}
}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Exists: return "EXISTS";
    case Verdict::NotExists: return "NOT_EXISTS";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

bool Certificate::all_passed() const {
  return std::all_of(checklist.begin(), checklist.end(),
                     [](const ChecklistItem& c) { return c.pass; });
}

double BoundaryData::outer_min() const {
  if (!outer_samples) return outer_constant;
  return *std::min_element(outer_samples->begin(), outer_samples->end());
}

double BoundaryData::outer_max() const {
  if (!outer_samples) return outer_constant;
  return *std::max_element(outer_samples->begin(), outer_samples->end());
}

void validate_domain(const DomainSpec& spec, double tol) {
  if (spec.n < 2) throw std::invalid_argument("DomainSpec: n < 2");
  if (spec.outer.dim != spec.n)
    throw std::invalid_argument("DomainSpec: outer curve dimension mismatch");
  for (const auto& g : spec.inners) {
    if (g.dim != spec.n)
      throw std::invalid_argument("DomainSpec: inner curve dimension mismatch");
    for (const auto& p : g.points)
      if (!spec.outer.contains(p))
        throw std::invalid_argument(
            "DomainSpec: inner curve not inside the outer curve");
  }
  for (std::size_t i = 0; i < spec.inners.size(); ++i)
    for (std::size_t j = i + 1; j < spec.inners.size(); ++j) {
      const auto& a = spec.inners[i];
      const auto& b = spec.inners[j];
      for (const auto& p : b.points)
        if (a.contains(p))
          throw std::invalid_argument(
              "DomainSpec: inner regions are not disjoint");
      for (const auto& p : a.points)
        if (b.contains(p))
          throw std::invalid_argument(
              "DomainSpec: inner regions are not disjoint");
      if (set_distance(a, b, tol) <= tol)
        throw std::invalid_argument("DomainSpec: inner curves touch");
    }
}

double alpha1(int n, double R1, double delta) {
  if (delta < 0) throw std::invalid_argument("alpha1: negative delta");
  return catenoid::profile_value(n, R1, R1 + delta);
}

double alpha2(int n, OuterCondition cond, double R2, double delta) {
  if (delta < 0) throw std::invalid_argument("alpha2: negative delta");
  switch (cond) {
    case OuterCondition::Finite:
      return catenoid::profile_value(n, R2, R2 + delta);
    case OuterCondition::Horosphere:
      if (n != 2)
        throw std::invalid_argument(
            "alpha2: horosphere branch is only available for n = 2");
      return std::acos(std::exp(-delta));
    case OuterCondition::Convex:
      throw std::invalid_argument(
          "alpha2: the convex outer condition belongs to the oscillation "
          "certificate");
  }
  throw std::invalid_argument("alpha2: bad condition");
}

namespace {

ChecklistItem run_interior_checks(const DomainSpec& spec, double R) {
  ChecklistItem item;
  item.hypothesis = "every inner curve satisfies the interior sphere "
                    "condition of radius " + fmt(R);
  item.pass = true;
  for (std::size_t i = 0; i < spec.inners.size(); ++i) {
    const auto rep = hypgeo::interior_sphere_check(spec.inners[i], R);
    if (!rep.ok) {
      item.pass = false;
      item.witness = "inner curve " + std::to_string(i) + " fails at sample " +
                     std::to_string(rep.failures.front()) + " (margin " +
                     fmt(rep.margins[rep.failures.front()]) + ")";
      return item;
    }
  }
  item.witness = "all samples admit a tangent interior sphere";
  return item;
}

double computed_delta(const DomainSpec& spec) {
  double d = std::numeric_limits<double>::infinity();
  for (const auto& g : spec.inners)
    d = std::min(d, hypgeo::set_distance(g, spec.outer));
  return d;
}

void append_delta_crosscheck(Certificate& cert, const DomainSpec& spec,
                             double delta) {
  if (!spec.conditions.declared_delta) return;
  ChecklistItem item;
  item.hypothesis = "declared boundary separation agrees with the sampled one";
  const double dd = *spec.conditions.declared_delta;
  item.pass = std::abs(dd - delta) <= 0.01 * std::max(std::abs(dd), delta);
  item.witness = "declared " + fmt(dd) + ", computed " + fmt(delta);
  cert.checklist.push_back(item);
}

}  // namespace

Certificate certify_theorem1(const DomainSpec& spec, const BoundaryData& data) {
  validate_domain(spec);
  if (spec.n != 2)
    throw std::invalid_argument(
        "certify_theorem1: sampled-curve certification is implemented for "
        "n = 2 (use the threshold arithmetic directly for radial fixtures)");
  if (data.outer_samples || data.outer_constant != 0.0)
    throw std::invalid_argument(
        "certify_theorem1: outer data must be the constant 0");
  if (spec.inners.empty())
    throw std::invalid_argument("certify_theorem1: no inner curves");
  const auto& cond = spec.conditions;
  if (cond.outer == OuterCondition::Convex)
    throw std::invalid_argument(
        "certify_theorem1: outer condition must be a sphere or horosphere "
        "condition");
  if (!(cond.inner_sphere_radius > 0))
    throw std::invalid_argument("certify_theorem1: R1 <= 0");
  if (cond.outer == OuterCondition::Finite && !(cond.outer_sphere_radius > 0))
    throw std::invalid_argument("certify_theorem1: R2 <= 0");

  Certificate cert;
  const double h = data.inner_height;
  const double R1 = cond.inner_sphere_radius;

  cert.checklist.push_back(run_interior_checks(spec, R1));

  {
    ChecklistItem item;
    if (cond.outer == OuterCondition::Finite) {
      item.hypothesis = "outer curve satisfies the exterior sphere condition "
                        "of radius " + fmt(cond.outer_sphere_radius);
      const auto rep =
          hypgeo::exterior_sphere_check(spec.outer, cond.outer_sphere_radius);
      item.pass = rep.ok;
      item.witness = rep.ok ? "all samples admit a tangent exterior sphere"
                            : "fails at sample " +
                                  std::to_string(rep.failures.front());
    } else {
      item.hypothesis = "outer curve satisfies the exterior horosphere "
                        "condition";
      const auto rep =
          hypgeo::exterior_sphere_check(spec.outer, hypgeo::kInfiniteRadius);
      item.pass = rep.ok;
      item.witness = rep.ok ? "all samples admit a tangent exterior horocycle"
                            : "fails at sample " +
                                  std::to_string(rep.failures.front());
    }
    cert.checklist.push_back(item);
  }

  const double delta = computed_delta(spec);
  cert.thresholds.delta = delta;
  append_delta_crosscheck(cert, spec, delta);

  const double a1 = alpha1(spec.n, R1, delta);
  const double a2 = alpha2(spec.n, cond.outer, cond.outer_sphere_radius, delta);
  cert.thresholds.alpha1 = a1;
  cert.thresholds.alpha2 = a2;

  {
    ChecklistItem item;
    item.hypothesis = "0 <= h <= min(alpha1, alpha2)";
    item.pass = h >= 0 && h <= std::min(a1, a2);
    item.witness = "h = " + fmt(h) + ", alpha1 = " + fmt(a1) +
                   ", alpha2 = " + fmt(a2);
    cert.checklist.push_back(item);
  }

  cert.verdict = cert.all_passed() ? Verdict::Exists : Verdict::Inconclusive;
  return cert;
}

Certificate certify_theorem2(const DomainSpec& spec, const BoundaryData& data) {
  validate_domain(spec);
  if (spec.n != 2)
    throw std::invalid_argument(
        "certify_theorem2: sampled-curve certification is implemented for "
        "n = 2");
  if (spec.inners.empty())
    throw std::invalid_argument("certify_theorem2: no inner curves");
  if (spec.conditions.outer != OuterCondition::Convex)
    throw std::invalid_argument(
        "certify_theorem2: the outer condition must be CONVEX");
  const double R = spec.conditions.inner_sphere_radius;
  if (!(R > 0)) throw std::invalid_argument("certify_theorem2: R <= 0");
  if (data.outer_samples && data.outer_samples->size() < 3)
    throw std::invalid_argument(
        "certify_theorem2: sampled outer data needs at least 3 samples");
  if (data.outer_samples &&
      data.outer_samples->size() != spec.outer.size())
    throw std::invalid_argument(
        "certify_theorem2: outer samples must align with the outer curve");

  Certificate cert;
  const double h = data.inner_height;
  const double fmin = data.outer_min();
  const double fmax = data.outer_max();
  const double osc = fmax - fmin;

  cert.checklist.push_back(run_interior_checks(spec, R));

  {
    ChecklistItem item;
    item.hypothesis = "outer curve is convex in the hyperbolic sense";
    const auto rep = hypgeo::convexity_check(spec.outer);
    item.pass = rep.ok;
    item.witness = rep.ok ? "supporting geodesic found at every sample"
                          : "fails at sample " +
                                std::to_string(rep.failures.front());
    cert.checklist.push_back(item);
  }

  const double delta = computed_delta(spec);
  cert.thresholds.delta = delta;
  append_delta_crosscheck(cert, spec, delta);

  const double a = alpha1(spec.n, R, delta);
  cert.thresholds.alpha = a;

  {
    ChecklistItem item;
    item.hypothesis = "osc f <= alpha";
    item.pass = osc <= a;
    item.witness = "osc f = " + fmt(osc) + ", alpha = " + fmt(a);
    cert.checklist.push_back(item);
  }
  {
    ChecklistItem item;
    item.hypothesis = "max f <= h <= min f + alpha";
    item.pass = fmax <= h && h <= fmin + a;
    item.witness = "h = " + fmt(h) + ", max f = " + fmt(fmax) +
                   ", min f + alpha = " + fmt(fmin + a);
    cert.checklist.push_back(item);
  }

  cert.verdict = cert.all_passed() ? Verdict::Exists : Verdict::Inconclusive;
  return cert;
}

Certificate certify_nonexistence(int n, double h) {
  if (n < 2) throw std::invalid_argument("certify_nonexistence: n < 2");
  if (!(h > 0)) throw std::invalid_argument("certify_nonexistence: h <= 0");
  Certificate cert;
  const double cap = kPi / (2.0 * n - 2.0);

  ChecklistItem item;
  item.hypothesis = "h >= pi/(2n-2)";
  item.pass = h >= cap;
  item.witness = "h = " + fmt(h) + ", cap = " + fmt(cap);
  cert.checklist.push_back(item);

  // Sliding evidence: half-catenoid heights stay under the cap on a log
  // grid of neck radii, so the shrinking family never reaches height h.
  double sup = 0;
  const int kGrid = 16;
  for (int k = 0; k < kGrid; ++k) {
    const double r = 0.05 * std::pow(10.0 / 0.05, k / double(kGrid - 1));
    const double hh = catenoid::half_height(n, r);
    cert.evidence_grid.push_back({r, hh});
    sup = std::max(sup, hh);
  }
  ChecklistItem ev;
  ev.hypothesis = "sampled half-catenoid heights stay below pi/(2n-2)";
  ev.pass = sup < cap;
  ev.witness = "sup = " + fmt(sup) + ", margin = " + fmt(cap - sup);
  cert.checklist.push_back(ev);

  cert.verdict = (item.pass && ev.pass) ? Verdict::NotExists
                                        : Verdict::Inconclusive;
  return cert;
}

}  // namespace hypermin::certify

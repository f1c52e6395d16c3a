#include "hypermin/catenoid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hypermin/quadrature.hpp"

namespace hypermin::catenoid {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_nr(int n, double r) {
  if (n < 2) throw std::invalid_argument("catenoid: n must be >= 2");
  if (!(r > 0)) throw std::invalid_argument("catenoid: neck radius <= 0");
}

// sinh^{2n-2}(xi) - sinh^{2n-2}(r), factored to avoid cancellation near
// xi = r:  (a - b) * sum a^k b^{m-1-k}  with  a - b written through
// 2 cosh((xi+r)/2) sinh((xi-r)/2).
double power_gap(int n, double r, double xi) {
  const int m = 2 * n - 2;
  const double sa = std::sinh(xi), sb = std::sinh(r);
  double sum = 0, term = std::pow(sb, m - 1);
  const double ratio = sa / sb;
  for (int k = 0; k < m; ++k) {
    sum += term;
    term *= ratio;
  }
  const double diff =
      2.0 * std::cosh((xi + r) / 2.0) * std::sinh((xi - r) / 2.0);
  return diff * sum;
}

// Integrand after the substitution xi = r + s^2 (weight 2s); smooth and even
// in s with a finite limit at s = 0.
double substituted_integrand(int n, double r, double s) {
  if (s == 0) return 2.0 * std::sqrt(std::tanh(r) / (2.0 * n - 2.0));
  const double gap = power_gap(n, r, r + s * s);
  return 2.0 * s * std::pow(std::sinh(r), n - 1) / std::sqrt(gap);
}

// Raw integrand, only used away from the singularity.
double raw_integrand(int n, double r, double xi) {
  const double gap = power_gap(n, r, xi);
  return std::pow(std::sinh(r), n - 1) / std::sqrt(gap);
}

}  // namespace

double profile_value(int n, double r, double rho) {
  check_nr(n, r);
  if (rho < r)
    throw std::invalid_argument("profile_value: rho < neck radius");
  if (rho == r) return 0.0;
  const double smax = std::sqrt(rho - r);
  auto f = [n, r](double s) { return substituted_integrand(n, r, s); };
  return quadrature::integrate(f, 0.0, smax, 1e-12, 1e-15).value;
}

double half_height(int n, double r) {
  check_nr(n, r);
  const double split = r + 1.0;
  const double inner = profile_value(n, r, split);

  // Tail truncation: past T the integrand is below
  // sinh^{n-1}(r) / (sqrt(1-q) sinh^{n-1}(xi)) with q = (sinh r/sinh T)^{2n-2},
  // and int_T^inf sinh^{-(n-1)} has an elementary exponential bound. All in
  // logs so large arguments do not overflow.
  const int m = n - 1;
  const double log_shr = std::log(std::sinh(r));
  double T = r + 2.0;
  for (;;) {
    const double log_shT = std::log(std::sinh(T));
    const double q = std::exp(2.0 * m * (log_shr - log_shT));
    if (q < 0.5) {
      const double log_tail = m * log_shr - 0.5 * std::log1p(-q) -
                              m * std::log((1.0 - std::exp(-2.0 * T)) / 2.0) -
                              m * T - std::log(static_cast<double>(m));
      if (log_tail < std::log(1e-12)) break;
    }
    T += 2.0;
    if (T > r + 400.0)
      throw std::runtime_error("half_height: tail bound did not close");
  }

  auto f = [n, r](double xi) { return raw_integrand(n, r, xi); };
  const double mid = quadrature::integrate(f, split, T, 1e-12, 1e-15).value;
  return inner + mid;
}

double invert_profile(int n, double R, double h) {
  check_nr(n, R);
  if (h < 0) throw std::invalid_argument("invert_profile: negative height");
  if (h == 0) return R;
  const double cap = half_height(n, R);
  if (h >= cap)
    throw std::invalid_argument(
        "invert_profile: height at or above the half-catenoid cap");
  double lo = R, hi = R + 1.0;
  while (profile_value(n, R, hi) < h) {
    lo = hi;
    hi = R + 2.0 * (hi - R);
    if (hi > R + 1e6)
      throw std::runtime_error("invert_profile: bracket expansion failed");
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double g = profile_value(n, R, mid);
    if (std::abs(g - h) < 1e-11) return mid;
    (g < h ? lo : hi) = mid;
    if (hi - lo < 1e-13 * std::max(1.0, R)) break;
  }
  return 0.5 * (lo + hi);
}

std::pair<double, double> profile_intersection(int n, double r1, double r2) {
  check_nr(n, r1);
  check_nr(n, r2);
  if (!(r1 < r2))
    throw std::invalid_argument("profile_intersection: requires r1 < r2");
  auto diff = [&](double rho) {
    return profile_value(n, r1, rho) - profile_value(n, r2, rho);
  };
  double lo = r2;           // g_{r1}(r2) > 0 = g_{r2}(r2)
  double hi = r2 + 1.0;
  while (diff(hi) > 0) {
    lo = hi;
    hi = r2 + 2.0 * (hi - r2);
    if (hi > r2 + 200.0)
      throw std::runtime_error(
          "profile_intersection: no sign change found (profiles too close?)");
  }
  for (int it = 0; it < 120; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double d = diff(mid);
    if (std::abs(d) < 1e-9 && hi - lo < 1e-9) {
      return {mid, profile_value(n, r1, mid)};
    }
    (d > 0 ? lo : hi) = mid;
  }
  const double rho = 0.5 * (lo + hi);
  return {rho, profile_value(n, r1, rho)};
}

CatenoidProfile::CatenoidProfile(int n, double r, double rho_max)
    : n_(n), r_(r), rho_max_(rho_max) {
  check_nr(n, r);
  if (!(rho_max > r))
    throw std::invalid_argument("CatenoidProfile: rho_max <= neck radius");
  const double smax = std::sqrt(rho_max - r);
  std::size_t K = 256;
  for (int attempt = 0; attempt < 4; ++attempt) {
    s_.assign(K + 1, 0.0);
    g_.assign(K + 1, 0.0);
    slope_.assign(K + 1, 0.0);
    for (std::size_t k = 0; k <= K; ++k) {
      s_[k] = smax * static_cast<double>(k) / static_cast<double>(K);
      // d g / d s is the substituted integrand itself.
      slope_[k] = substituted_integrand(n_, r_, s_[k]);
    }
    auto f = [this](double s) { return substituted_integrand(n_, r_, s); };
    g_[0] = 0.0;
    for (std::size_t k = 1; k <= K; ++k)
      g_[k] = g_[k - 1] +
              quadrature::integrate(f, s_[k - 1], s_[k], 1e-13, 1e-16).value;
    // Fritsch-Carlson clamp keeps the Hermite segments monotone.
    for (std::size_t k = 0; k < K; ++k) {
      const double d = (g_[k + 1] - g_[k]) / (s_[k + 1] - s_[k]);
      slope_[k] = std::min(slope_[k], 3.0 * d);
      slope_[k + 1] = std::min(slope_[k + 1], 3.0 * d);
    }
    // Validate interpolation at panel midpoints against direct quadrature.
    double worst = 0;
    const std::size_t stride = std::max<std::size_t>(1, K / 64);
    for (std::size_t k = 0; k < K; k += stride) {
      const double sm = 0.5 * (s_[k] + s_[k + 1]);
      const double exact = profile_value(n_, r_, r_ + sm * sm);
      worst = std::max(worst, std::abs(value(r_ + sm * sm) - exact));
    }
    if (worst <= 1e-9) break;
    K *= 2;
    if (attempt == 3)
      throw std::runtime_error("CatenoidProfile: interpolation validation "
                               "failed to reach 1e-9");
  }
  table_.reserve(s_.size());
  for (std::size_t k = 0; k < s_.size(); ++k)
    table_.emplace_back(r_ + s_[k] * s_[k], g_[k]);
}

double CatenoidProfile::value(double rho) const {
  if (rho < r_ - 1e-12)
    throw std::invalid_argument("CatenoidProfile: rho < neck radius");
  rho = std::max(rho, r_);
  if (rho > rho_max_) return profile_value(n_, r_, rho);
  const double s = std::sqrt(rho - r_);
  const auto it = std::upper_bound(s_.begin(), s_.end(), s);
  std::size_t k = it == s_.begin() ? 0 : (it - s_.begin()) - 1;
  k = std::min(k, s_.size() - 2);
  const double h = s_[k + 1] - s_[k];
  const double t = (s - s_[k]) / h;
  const double t2 = t * t, t3 = t2 * t;
  return g_[k] * (2 * t3 - 3 * t2 + 1) + h * slope_[k] * (t3 - 2 * t2 + t) +
         g_[k + 1] * (-2 * t3 + 3 * t2) + h * slope_[k + 1] * (t3 - t2);
}

double CatenoidGraph::height(const hypgeo::HPoint& q) const {
  const double rho = hypgeo::hyp_distance(q, center);
  if (rho < profile.neck_radius() - 1e-9)
    throw std::invalid_argument(
        "CatenoidGraph: point strictly inside the neck sphere");
  return sign * profile.value(std::max(rho, profile.neck_radius())) + offset;
}

double graph_eval(const CatenoidGraph& g, const hypgeo::HPoint& q) {
  return g.height(q);
}

}  // namespace hypermin::catenoid

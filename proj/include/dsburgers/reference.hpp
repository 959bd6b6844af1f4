#pragma once

// Independent oracles for the flat-space (lambda = 0) Burgers equation and
// small analysis helpers: error norms, convergence order, front tracking.
// Nothing here calls into the godunov solver.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "dsburgers/errors.hpp"
#include "dsburgers/grid.hpp"

namespace dsburgers::reference {

struct RiemannData {
  double vl = 0.0;
  double vr = 0.0;
  double r0 = 0.0;
};

/// Entropy solution of the classical Riemann problem for v_t + (v^2/2)_r = 0.
inline double exact_riemann_classical(const RiemannData& d, double t, double r) {
  if (t <= 0.0) return r < d.r0 ? d.vl : d.vr;
  if (d.vl > d.vr) {
    const double s = (d.vl + d.vr) / 2.0;
    return r < d.r0 + s * t ? d.vl : d.vr;
  }
  if (r < d.r0 + d.vl * t) return d.vl;
  if (r > d.r0 + d.vr * t) return d.vr;
  return (r - d.r0) / t;
}

/// Smooth initial profile with known range and derivative.
struct SmoothProfile {
  std::function<double(double)> value;
  std::function<double(double)> derivative;
  double min_value = 0.0;
  double max_value = 0.0;
  double max_neg_slope = 0.0;  // max(-v0'), zero if the profile never steepens

  /// First time at which characteristics cross.
  double shock_time() const {
    return max_neg_slope > 0.0 ? 1.0 / max_neg_slope : std::numeric_limits<double>::infinity();
  }
};

inline SmoothProfile sine_profile(double mean, double amplitude, double wavenumber) {
  const double a = std::abs(amplitude);
  return {[=](double r) { return mean + amplitude * std::sin(wavenumber * r); },
          [=](double r) { return amplitude * wavenumber * std::cos(wavenumber * r); },
          mean - a,
          mean + a,
          a * std::abs(wavenumber)};
}

inline SmoothProfile constant_profile(double k) {
  return {[=](double) { return k; }, [](double) { return 0.0; }, k, k, 0.0};
}

/// Solves v = v0(r - v t) by bisection. Before the shock time the map
/// v -> v - v0(r - v t) is strictly increasing, so the root is unique.
inline double exact_smooth_classical(const SmoothProfile& ic, double t, double r) {
  if (!(t < ic.shock_time()))
    throw DomainError(DomainErrc::PreShockOnly, "characteristic solution requested past the shock time");
  if (t == 0.0) return ic.value(r);

  constexpr int kMaxIter = 200;
  constexpr double kTol = 1e-12;
  double lo = ic.min_value - 1.0;
  double hi = ic.max_value + 1.0;
  const auto g = [&](double v) { return v - ic.value(r - v * t); };
  for (int it = 0; it < kMaxIter && hi - lo > kTol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) > 0.0)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

/// Godunov flux of v^2/2 in min/max form: min over [v1, v2] when v1 <= v2,
/// max over [v2, v1] otherwise.
inline double godunov_flux(double v1, double v2) {
  const auto f = [](double v) { return v * v / 2.0; };
  if (v1 <= v2) {
    if (v1 > 0.0) return f(v1);
    if (v2 < 0.0) return f(v2);
    return 0.0;
  }
  return (v1 + v2) / 2.0 >= 0.0 ? f(v1) : f(v2);
}

/// Classical first-order Godunov update with zero-gradient boundaries.
/// The update is written as v - (dt/dr) * (f_right - f_left), matching the
/// solver's expression order so that both agree bit for bit at lambda == 0.
inline std::vector<double> plain_burgers_step(std::span<const double> v, double dr, double dt) {
  const std::size_t n = v.size();
  std::vector<double> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double left = j == 0 ? v[0] : v[j - 1];
    const double right = j + 1 == n ? v[n - 1] : v[j + 1];
    const double fr = godunov_flux(v[j], right);
    const double fl = godunov_flux(left, v[j]);
    out[j] = v[j] - (dt / dr) * (fr - fl);
  }
  return out;
}

inline double total_variation(std::span<const double> v) {
  double tv = 0.0;
  for (std::size_t j = 1; j < v.size(); ++j) tv += std::abs(v[j] - v[j - 1]);
  return tv;
}

enum class Crossing { Any, Falling, Rising };

/// Rightmost place where the profile crosses `level`, scanning leftward from
/// the right boundary and interpolating linearly between cell centres.
/// `Falling` only accepts crossings where v drops through the level going
/// right (a shock front), `Rising` only where it climbs (a fan).
inline double front_position(std::span<const double> v, const Grid& grid, double level,
                             Crossing direction = Crossing::Any) {
  for (std::size_t j = v.size() - 1; j-- > 0;) {
    const double a = v[j] - level;
    const double b = v[j + 1] - level;
    const bool falls = a >= 0.0 && b < 0.0;
    const bool rises = a <= 0.0 && b > 0.0;
    const bool hit = direction == Crossing::Falling ? falls : direction == Crossing::Rising ? rises : (falls || rises);
    if (!hit) continue;
    const double w = a / (a - b);
    return grid.center(j) + w * (grid.center(j + 1) - grid.center(j));
  }
  throw DomainError(DomainErrc::NotFound, "profile never crosses the requested level");
}

struct ErrorReport {
  double l1 = 0.0;
  double linf = 0.0;
  std::optional<double> observed_order;
};

/// L1 and max errors against an exact profile sampled at cell centres,
/// restricted to centres inside [r_lo, r_hi].
template <class Exact>
ErrorReport error_norms(std::span<const double> numeric, Exact&& exact, const Grid& grid,
                        double r_lo = -std::numeric_limits<double>::infinity(),
                        double r_hi = std::numeric_limits<double>::infinity()) {
  ErrorReport rep;
  for (std::size_t j = 0; j < numeric.size(); ++j) {
    const double r = grid.center(j);
    if (r < r_lo || r > r_hi) continue;
    const double e = std::abs(numeric[j] - exact(r));
    rep.l1 += grid.dr() * e;
    rep.linf = std::max(rep.linf, e);
  }
  return rep;
}

/// log2(e_coarse / e_fine) for a factor-two refinement.
inline double observed_order(double coarse_error, double fine_error) { return std::log2(coarse_error / fine_error); }

}  // namespace dsburgers::reference

#pragma once

// de Sitter metric on (t, r, theta, phi), its Christoffel symbols, and the
// pressureless perfect-fluid quantities of a radial flow.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>

#include "dsburgers/errors.hpp"
#include "dsburgers/params.hpp"

namespace dsburgers::geometry {

struct Coordinates {
  double t = 0.0;
  double r = 0.0;
  double theta = std::numbers::pi / 2;
  double phi = 0.0;
};

/// Diagonal metric; off-diagonal entries are identically zero.
struct MetricComponents {
  std::array<double, 4> diag{};

  double operator[](std::size_t i) const { return diag[i]; }
  double g00() const { return diag[0]; }
  double g11() const { return diag[1]; }
  double g22() const { return diag[2]; }
  double g33() const { return diag[3]; }
};

/// gamma(mu, alpha, beta) = Gamma^mu_{alpha beta}.
class ChristoffelTable {
 public:
  double operator()(int mu, int alpha, int beta) const { return g_[mu][alpha][beta]; }

  /// Writes both (alpha, beta) and (beta, alpha).
  void set_symmetric(int mu, int alpha, int beta, double value) {
    g_[mu][alpha][beta] = value;
    g_[mu][beta][alpha] = value;
  }

  double max_abs_difference(const ChristoffelTable& other) const {
    double worst = 0.0;
    for (int m = 0; m < 4; ++m)
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) worst = std::max(worst, std::abs(g_[m][a][b] - other.g_[m][a][b]));
    return worst;
  }

 private:
  std::array<std::array<std::array<double, 4>, 4>, 4> g_{};
};

struct FourVelocity {
  double u0 = 0.0;
  double u1 = 0.0;
};

/// Contravariant stress-energy, 1+1 block only (t10 == t01).
struct StressEnergy {
  double t00 = 0.0;
  double t01 = 0.0;
  double t11 = 0.0;

  double t10() const { return t01; }
};

namespace detail {

inline double lapse_squared(const Params& p, double r) { return 1.0 - p.lambda() * r * r; }

inline void require_not_horizon(double b) {
  if (b == 0.0) throw DomainError(DomainErrc::HorizonSingularity, "1 - lambda r^2 vanishes (horizon)");
}

inline void require_nondegenerate_angles(const Coordinates& x) {
  if (x.r == 0.0 || !(x.theta > 0.0 && x.theta < std::numbers::pi) || std::sin(x.theta) == 0.0)
    throw DomainError(DomainErrc::AngularDegeneracy, "r == 0 or sin(theta) == 0");
}

inline void require_inside_horizon(double b) {
  if (!(b > 0.0)) throw DomainError(DomainErrc::HorizonSingularity, "radius at or beyond the horizon");
}

inline double require_subluminal(const Params& p, double v) {
  const double gap = p.c() * p.c() - v * v;
  if (!(gap > 0.0)) throw DomainError(DomainErrc::Superluminal, "|v| must be below the light speed");
  return gap;
}

}  // namespace detail

inline MetricComponents metric_covariant(const Params& p, const Coordinates& x) {
  const double b = detail::lapse_squared(p, x.r);
  detail::require_not_horizon(b);
  const double s = std::sin(x.theta);
  return {{-b, 1.0 / b, x.r * x.r, x.r * x.r * s * s}};
}

inline MetricComponents metric_contravariant(const Params& p, const Coordinates& x) {
  detail::require_nondegenerate_angles(x);
  const double b = detail::lapse_squared(p, x.r);
  detail::require_not_horizon(b);
  const double s = std::sin(x.theta);
  const double lr2 = p.lambda() * x.r * x.r;
  return {{1.0 / (lr2 - 1.0), b, 1.0 / (x.r * x.r), 1.0 / (x.r * x.r * s * s)}};
}

/// Closed-form connection coefficients of the static dS metric.
inline ChristoffelTable christoffel_closed_form(const Params& p, const Coordinates& x) {
  detail::require_nondegenerate_angles(x);
  const double r = x.r;
  const double lam = p.lambda();
  const double lr2 = lam * r * r;
  detail::require_not_horizon(1.0 - lr2);

  const double s = std::sin(x.theta);
  const double co = std::cos(x.theta);

  ChristoffelTable g;
  g.set_symmetric(0, 0, 1, lam * r / (lr2 - 1.0));
  g.set_symmetric(1, 1, 1, lam * r / (1.0 - lr2));
  g.set_symmetric(1, 0, 0, lam * r * (lr2 - 1.0));
  g.set_symmetric(1, 2, 2, r * (lr2 - 1.0));
  g.set_symmetric(1, 3, 3, r * (lr2 - 1.0) * s * s);
  g.set_symmetric(2, 1, 2, 1.0 / r);
  g.set_symmetric(3, 1, 3, 1.0 / r);
  g.set_symmetric(2, 3, 3, -s * co);
  g.set_symmetric(3, 2, 3, co / s);
  return g;
}

/// Connection coefficients from the defining formula, with every metric
/// derivative taken by a central difference of metric_covariant. Used as the
/// independent check on christoffel_closed_form.
inline ChristoffelTable christoffel_numeric(const Params& p, const Coordinates& x, double h = 1e-5) {
  detail::require_nondegenerate_angles(x);

  const auto shifted = [&](int axis, double delta) {
    Coordinates y = x;
    switch (axis) {
      case 0: y.t += delta; break;
      case 1: y.r += delta; break;
      case 2: y.theta += delta; break;
      default: y.phi += delta; break;
    }
    return y;
  };

  // dg[nu][i] = d g_ii / d x^nu
  std::array<std::array<double, 4>, 4> dg{};
  const double b0 = detail::lapse_squared(p, x.r);
  for (int nu = 0; nu < 4; ++nu) {
    const Coordinates plus = shifted(nu, h);
    const Coordinates minus = shifted(nu, -h);
    const double bp = detail::lapse_squared(p, plus.r);
    const double bm = detail::lapse_squared(p, minus.r);
    // the horizon must not sit inside (or on the edge of) the stencil
    if (b0 == 0.0 || bp == 0.0 || bm == 0.0 || (bp > 0.0) != (b0 > 0.0) || (bm > 0.0) != (b0 > 0.0))
      throw DomainError(DomainErrc::StencilDegeneracy, "difference stencil crosses the horizon");
    const MetricComponents gp = metric_covariant(p, plus);
    const MetricComponents gm = metric_covariant(p, minus);
    for (int i = 0; i < 4; ++i) dg[nu][i] = (gp[i] - gm[i]) / (2.0 * h);
  }

  const MetricComponents g = metric_covariant(p, x);
  std::array<double, 4> inv{};
  for (int i = 0; i < 4; ++i) inv[i] = 1.0 / g[i];

  // for a diagonal metric g_{ab} = delta_ab g_aa, so d_c g_{ab} = delta_ab dg[c][a]
  const auto dmetric = [&](int c, int a, int b) { return a == b ? dg[c][a] : 0.0; };

  ChristoffelTable out;
  for (int mu = 0; mu < 4; ++mu)
    for (int a = 0; a < 4; ++a)
      for (int b = a; b < 4; ++b) {
        // only nu == mu survives the contraction with the diagonal inverse
        const int nu = mu;
        const double bracket = -dmetric(nu, a, b) + dmetric(b, a, nu) + dmetric(a, b, nu);
        out.set_symmetric(mu, a, b, 0.5 * inv[mu] * bracket);
      }
  return out;
}

/// Positive root for u0 (future pointing); u1 carries the sign of v.
inline FourVelocity fluid_four_velocity(const Params& p, double r, double v) {
  const double gap = detail::require_subluminal(p, v);
  const double b = detail::lapse_squared(p, r);
  detail::require_inside_horizon(b);
  const double c = p.c();
  return {c / std::sqrt(b * gap), v * std::sqrt(b) / std::sqrt(gap)};
}

inline StressEnergy stress_energy_pressureless(const Params& p, double r, double v, double rho) {
  const double gap = detail::require_subluminal(p, v);
  const double b = detail::lapse_squared(p, r);
  detail::require_inside_horizon(b);
  if (!(rho >= 0.0)) throw DomainError(DomainErrc::NegativeDensity, "density must be non-negative");
  const double c = p.c();
  const double c2 = c * c;
  return {rho * c2 * c2 / (gap * b), c * v * rho * c2 / gap, c2 * b * v * v * rho / gap};
}

}  // namespace dsburgers::geometry

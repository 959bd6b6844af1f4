#pragma once

// The continuous balance law
//
//   d_t v + d_r( b(r) v^2 / 2 ) = S(r, v),   b(r) = 1 - lambda r^2,
//
// with its two source variants and the static solution family.

#include <cmath>
#include <string>
#include <string_view>

#include "dsburgers/errors.hpp"
#include "dsburgers/params.hpp"

namespace dsburgers::model {

enum class SourceForm {
  Conservative,          // lambda r (c^2 - 2 v^2), consistent with the divergence form of the flux
  PaperNonConservative,  // lambda r (c^2 - v^2), the source written next to the quasi-linear form
};

inline std::string_view to_string(SourceForm f) {
  return f == SourceForm::Conservative ? "conservative" : "paper";
}

inline SourceForm source_form_from_string(std::string_view s) {
  if (s == "conservative") return SourceForm::Conservative;
  if (s == "paper") return SourceForm::PaperNonConservative;
  throw ConfigError(ConfigErrc::Invalid, "source_form", "expected 'conservative' or 'paper', got '" + std::string(s) + "'");
}

inline double flux_coefficient(const Params& p, double r) { return 1.0 - p.lambda() * r * r; }

inline double conservative_flux(const Params& p, double r, double v) { return flux_coefficient(p, r) * v * v / 2.0; }

inline double source(const Params& p, double r, double v, SourceForm form) {
  const double c2 = p.c() * p.c();
  switch (form) {
    case SourceForm::Conservative: return p.lambda() * r * (c2 - 2.0 * v * v);
    case SourceForm::PaperNonConservative: return p.lambda() * r * (c2 - v * v);
  }
  return 0.0;
}

inline double characteristic_speed(const Params& p, double r, double v) { return flux_coefficient(p, r) * v; }

/// v_static(r) = sign * sqrt(c^2 - N (1 - lambda r^2)).
class StaticSolutionSpec {
 public:
  /// Validates the radicand over [r_min, r_max]; it is linear in b(r), which is
  /// monotone on r >= 0, so checking both ends is enough.
  StaticSolutionSpec(const Params& p, double n_param, int sign, double r_min = 0.0, double r_max = 1.0)
      : n_(n_param), sign_(sign) {
    if (sign != 1 && sign != -1) throw ConfigError(ConfigErrc::Invalid, "static_sign", "must be +1 or -1");
    if (!std::isfinite(n_param)) throw ConfigError(ConfigErrc::Invalid, "static_n", "must be finite");
    for (double r : {r_min, r_max}) {
      if (radicand(p, r) < 0.0)
        throw DomainError(DomainErrc::NegativeRadicand,
                          "static solution radicand c^2 - N(1 - lambda r^2) is negative at r = " + std::to_string(r));
    }
  }

  double n_param() const noexcept { return n_; }
  int sign() const noexcept { return sign_; }

  double radicand(const Params& p, double r) const { return p.c() * p.c() - n_ * flux_coefficient(p, r); }

 private:
  double n_;
  int sign_;
};

inline double static_solution(const Params& p, const StaticSolutionSpec& spec, double r) {
  const double q = spec.radicand(p, r);
  if (q < 0.0) throw DomainError(DomainErrc::NegativeRadicand, "static solution undefined at r = " + std::to_string(r));
  return spec.sign() * std::sqrt(q);
}

/// Residual of the steady balance  d_r(b v^2/2) - S_conservative(r, v)  for an
/// arbitrary profile, with the derivative taken by a central difference.
template <class Profile>
double steady_residual(const Params& p, Profile&& profile, double r, double h) {
  const double fp = conservative_flux(p, r + h, profile(r + h));
  const double fm = conservative_flux(p, r - h, profile(r - h));
  return (fp - fm) / (2.0 * h) - source(p, r, profile(r), SourceForm::Conservative);
}

inline double static_residual(const Params& p, const StaticSolutionSpec& spec, double r, double h) {
  return steady_residual(p, [&](double x) { return static_solution(p, spec, x); }, r, h);
}

}  // namespace dsburgers::model

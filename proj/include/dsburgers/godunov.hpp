#pragma once

// First- and second-order (MUSCL-Hancock) Godunov schemes for
//
//   d_t v + d_r( b(r) v^2/2 ) = S(r, v)
//
// on a uniform grid with transmissive boundaries.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dsburgers/errors.hpp"
#include "dsburgers/grid.hpp"
#include "dsburgers/model.hpp"
#include "dsburgers/params.hpp"

namespace dsburgers::godunov {

enum class Limiter { None, Minmod };

inline std::string_view to_string(Limiter l) { return l == Limiter::Minmod ? "minmod" : "none"; }

inline Limiter limiter_from_string(std::string_view s) {
  if (s == "minmod") return Limiter::Minmod;
  if (s == "none") return Limiter::None;
  throw ConfigError(ConfigErrc::Invalid, "limiter", "expected 'minmod' or 'none', got '" + std::string(s) + "'");
}

enum class BoundaryRule { Transmissive };

struct SchemeConfig {
  int order = 2;
  double cfl_number = 0.9;
  model::SourceForm source_form = model::SourceForm::Conservative;
  Limiter limiter = Limiter::Minmod;
  BoundaryRule bc = BoundaryRule::Transmissive;
  std::optional<double> fixed_dt;  // empty: adaptive

  bool adaptive() const noexcept { return !fixed_dt.has_value(); }
};

struct Snapshot {
  long iter = 0;
  double time = 0.0;
  std::vector<double> v;
  double max_speed = 0.0;
};

/// Exact Godunov flux for f(v) = v^2/2 between left state v1 and right state v2.
inline double riemann_flux(double v1, double v2) {
  if (v1 > v2) {
    // shock; v1 + v2 == 0 is the standing shock, where v1^2 == v2^2
    return v1 + v2 >= 0.0 ? v1 * v1 / 2.0 : v2 * v2 / 2.0;
  }
  if (v1 > 0.0) return v1 * v1 / 2.0;
  if (v2 < 0.0) return v2 * v2 / 2.0;
  return 0.0;
}

/// max_j |1 - lambda r^2| over the grid interfaces.
inline double max_flux_coefficient(const Grid& grid, const Params& p) {
  double m = 0.0;
  for (double r : grid.interfaces()) m = std::max(m, std::abs(model::flux_coefficient(p, r)));
  return m;
}

/// (dt/dr) * max_j |1 - lambda r_{j+-1/2}^2|; the scheme is admissible when this is <= 1.
inline double cfl_ratio(double dt, const Grid& grid, const Params& p) {
  return dt / grid.dr() * max_flux_coefficient(grid, p);
}

/// (dt/dr) * max_j |b_j| |v_j|, with b_j the larger coefficient at the cell's faces.
inline double state_cfl_ratio(double dt, std::span<const double> v, const Grid& grid, const Params& p) {
  double m = 0.0;
  for (std::size_t j = 0; j < v.size(); ++j) {
    const double b = std::max(std::abs(model::flux_coefficient(p, grid.interface(j))),
                              std::abs(model::flux_coefficient(p, grid.interface(j + 1))));
    m = std::max(m, b * std::abs(v[j]));
  }
  return dt / grid.dr() * m;
}

/// Rejects a configuration the scheme cannot run: bad order or CFL number,
/// or a fixed step that violates the CFL bound against the initial data.
inline void validate(const SchemeConfig& cfg, const Grid& grid, const Params& p, std::span<const double> initial) {
  if (cfg.order != 1 && cfg.order != 2) throw ConfigError(ConfigErrc::Invalid, "order", "must be 1 or 2");
  if (!(cfg.cfl_number > 0.0 && cfg.cfl_number <= 1.0))
    throw ConfigError(ConfigErrc::Invalid, "cfl", "must lie in (0, 1]");
  if (initial.size() != grid.nx())
    throw ConfigError(ConfigErrc::Invalid, "ic", "initial state has " + std::to_string(initial.size()) +
                                                     " cells, grid has " + std::to_string(grid.nx()));
  for (double x : initial)
    if (!std::isfinite(x)) throw ConfigError(ConfigErrc::Invalid, "ic", "initial state is not finite");
  if (cfg.fixed_dt) {
    const double dt = *cfg.fixed_dt;
    if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError(ConfigErrc::Invalid, "dt", "must be positive");
    if (cfl_ratio(dt, grid, p) > 1.0)
      throw ConfigError(ConfigErrc::Invalid, "dt",
                        "violates the CFL bound: (dt/dr) max|1 - lambda r^2| = " + std::to_string(cfl_ratio(dt, grid, p)));
    if (state_cfl_ratio(dt, initial, grid, p) > 1.0)
      throw ConfigError(ConfigErrc::Invalid, "dt", "violates the CFL bound for the initial wave speeds");
  }
}

/// Time step for the next update. Adaptive mode takes the smaller of the
/// geometric bound cfl dr / max|b| and cfl dr / max(|b| |v|), then clips to
/// t_end. The returned step always satisfies cfl_ratio(dt) <= 1.
inline double compute_dt(const State& state, const Grid& grid, const Params& p, const SchemeConfig& cfg,
                         std::optional<double> t_end = std::nullopt) {
  double dt = 0.0;
  if (cfg.fixed_dt) {
    dt = *cfg.fixed_dt;
  } else {
    constexpr double kSpeedFloor = 1e-12;
    const double max_b = max_flux_coefficient(grid, p);
    double max_bv = 0.0;
    for (std::size_t j = 0; j < state.v.size(); ++j) {
      const double b = std::max(std::abs(model::flux_coefficient(p, grid.interface(j))),
                                std::abs(model::flux_coefficient(p, grid.interface(j + 1))));
      max_bv = std::max(max_bv, b * std::max(std::abs(state.v[j]), kSpeedFloor));
    }
    const double denom = std::max(max_b, max_bv);
    if (denom > 0.0) {
      dt = cfg.cfl_number * grid.dr() / max_b;
      if (max_bv > 0.0) dt = std::min(dt, cfg.cfl_number * grid.dr() / max_bv);
    } else {
      // nothing moves; any step is stable
      dt = t_end ? 0.1 * (*t_end - state.time) : 1.0;
    }
  }
  if (t_end) dt = std::min(dt, *t_end - state.time);
  while (dt > 0.0 && cfl_ratio(dt, grid, p) > 1.0) dt = std::nextafter(dt, 0.0);
  return dt;
}

inline constexpr std::size_t kGhosts = 2;

/// Pads the cell averages with two zero-gradient ghost cells per side.
/// Cell j lives at index j + 2 of the result.
inline std::vector<double> apply_bc(std::span<const double> v, BoundaryRule = BoundaryRule::Transmissive) {
  std::vector<double> ext(v.size() + 2 * kGhosts);
  std::copy(v.begin(), v.end(), ext.begin() + kGhosts);
  for (std::size_t g = 0; g < kGhosts; ++g) {
    ext[g] = v.front();
    ext[ext.size() - 1 - g] = v.back();
  }
  return ext;
}

/// Reconstructed face values of one cell plus its average.
struct CellFaces {
  double left = 0.0;
  double right = 0.0;
  double mean = 0.0;
};

inline double minmod(double a, double b) {
  if (a * b <= 0.0) return 0.0;
  return std::abs(a) < std::abs(b) ? a : b;
}

/// Piecewise-linear reconstruction on cells -1 .. nx (one ghost layer each side).
/// Result index k corresponds to cell k - 1.
inline std::vector<CellFaces> reconstruct(std::span<const double> extended, const SchemeConfig& cfg) {
  const std::size_t n = extended.size() - 2;  // cells -1 .. nx
  std::vector<CellFaces> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double vm = extended[k];
    const double v0 = extended[k + 1];
    const double vp = extended[k + 2];
    // half the cell-width increment, i.e. slope * dr / 2
    double half_jump = 0.0;
    if (cfg.order == 2) {
      half_jump = cfg.limiter == Limiter::Minmod ? 0.5 * minmod(v0 - vm, vp - v0) : 0.25 * (vp - vm);
    }
    out[k] = {v0 - half_jump, v0 + half_jump, v0};
  }
  return out;
}

inline double physical_flux(double v) { return v * v / 2.0; }

/// Advances every cell's face pair (and average) by dt/2 using the in-cell
/// flux difference b F(v_R) - b F(v_L) and the source at the cell centre.
inline std::vector<CellFaces> half_step(std::span<const CellFaces> faces, const Grid& grid, const Params& p,
                                        const SchemeConfig& cfg, double dt) {
  std::vector<CellFaces> out(faces.size());
  const double k = dt / (2.0 * grid.dr());
  for (std::size_t idx = 0; idx < faces.size(); ++idx) {
    const long j = static_cast<long>(idx) - 1;
    const CellFaces& c = faces[idx];
    const double b_left = model::flux_coefficient(p, grid.face(j));
    const double b_right = model::flux_coefficient(p, grid.face(j + 1));
    const double s = model::source(p, grid.cell_center(j), c.mean, cfg.source_form);
    const double delta = -k * (b_right * physical_flux(c.right) - b_left * physical_flux(c.left)) + dt / 2.0 * s;
    out[idx] = {c.left + delta, c.right + delta, c.mean + delta};
    if (!std::isfinite(out[idx].left) || !std::isfinite(out[idx].right))
      throw InstabilityError(static_cast<std::size_t>(std::max(j, 0L)), InstabilityError::kUnknownIter,
                             "half step");
  }
  return out;
}

namespace detail {

inline void check_finite(std::span<const double> v) {
  for (std::size_t j = 0; j < v.size(); ++j)
    if (!std::isfinite(v[j])) throw InstabilityError(j, InstabilityError::kUnknownIter, "");
}

}  // namespace detail

/// One update with an explicitly given step.
inline State step_with_dt(const State& state, const Grid& grid, const Params& p, const SchemeConfig& cfg, double dt) {
  const std::size_t nx = grid.nx();
  const std::vector<double> ext = apply_bc(state.v, cfg.bc);
  const double k = dt / grid.dr();

  State next;
  next.v.resize(nx);
  next.time = state.time + dt;
  next.iter = state.iter + 1;

  if (cfg.order == 1) {
    // b_i * f(left, right) at face i; the update below keeps the exact
    // expression order of the plain Burgers reference so that lambda == 0
    // reproduces it bit for bit.
    std::vector<double> face_flux(nx + 1);
    for (std::size_t i = 0; i <= nx; ++i)
      face_flux[i] = model::flux_coefficient(p, grid.interface(i)) * riemann_flux(ext[i + 1], ext[i + 2]);
    for (std::size_t j = 0; j < nx; ++j) {
      const double v = state.v[j];
      const double s = model::source(p, grid.center(j), v, cfg.source_form);
      next.v[j] = v - k * (face_flux[j + 1] - face_flux[j]) + dt * s;
    }
  } else {
    const std::vector<CellFaces> faces = reconstruct(ext, cfg);
    const std::vector<CellFaces> half = half_step(faces, grid, p, cfg, dt);
    // face i sits between half[i] (cell i - 1) and half[i + 1] (cell i)
    std::vector<double> face_flux(nx + 1);
    for (std::size_t i = 0; i <= nx; ++i)
      face_flux[i] = model::flux_coefficient(p, grid.interface(i)) * riemann_flux(half[i].right, half[i + 1].left);
    for (std::size_t j = 0; j < nx; ++j) {
      const double s = model::source(p, grid.center(j), half[j + 1].mean, cfg.source_form);
      next.v[j] = state.v[j] - k * (face_flux[j + 1] - face_flux[j]) + dt * s;
    }
  }
  detail::check_finite(next.v);
  return next;
}

inline State step(const State& state, const Grid& grid, const Params& p, const SchemeConfig& cfg,
                  std::optional<double> t_end = std::nullopt) {
  return step_with_dt(state, grid, p, cfg, compute_dt(state, grid, p, cfg, t_end));
}

struct StepRecord {
  long iter = 0;  // iteration reached by this step
  double time = 0.0;
  double dt = 0.0;
  double cfl_ratio = 0.0;
};

struct RunPlan {
  std::vector<long> snapshots;    // strictly increasing; iteration 0 is always captured
  std::optional<double> t_end;    // stop at this time instead of at the last snapshot
  long max_iters = 10'000'000;    // guard for t_end runs
};

struct RunResult {
  std::vector<Snapshot> snapshots;
  double max_speed = 0.0;  // max |1 - lambda r^2| over the interfaces
  bool superluminal = false;  // max_speed > c
  double dt_min = std::numeric_limits<double>::infinity();
  double dt_max = 0.0;
  long steps = 0;
};

using StepObserver = std::function<void(const StepRecord&)>;

/// Marches the initial state and collects snapshots. Without t_end the run
/// stops at the last scheduled iteration; with t_end it stops once that time
/// is reached and also captures the final state.
inline RunResult run(State initial, const Grid& grid, const Params& p, const SchemeConfig& cfg, const RunPlan& plan,
                     const StepObserver& observer = {}) {
  for (std::size_t i = 0; i < plan.snapshots.size(); ++i) {
    if (plan.snapshots[i] < 0 || (i > 0 && plan.snapshots[i] <= plan.snapshots[i - 1]))
      throw ConfigError(ConfigErrc::Invalid, "snapshots", "must be non-negative and strictly increasing");
  }
  if (plan.t_end && !(*plan.t_end >= initial.time))
    throw ConfigError(ConfigErrc::Invalid, "t_end", "must not precede the initial time");
  validate(cfg, grid, p, initial.v);

  RunResult result;
  result.max_speed = max_flux_coefficient(grid, p);
  result.superluminal = result.max_speed > p.c();

  const auto capture = [&](const State& s) {
    if (!result.snapshots.empty() && result.snapshots.back().iter == s.iter) return;
    result.snapshots.push_back({s.iter, s.time, s.v, result.max_speed});
  };
  const auto scheduled = [&](long iter) {
    return std::binary_search(plan.snapshots.begin(), plan.snapshots.end(), iter);
  };

  State state = std::move(initial);
  capture(state);
  const long last = plan.snapshots.empty() ? 0 : plan.snapshots.back();

  const auto done = [&] {
    if (plan.t_end) return state.time >= *plan.t_end || state.iter >= plan.max_iters;
    return state.iter >= last;
  };

  while (!done()) {
    const double dt = compute_dt(state, grid, p, cfg, plan.t_end);
    if (!(dt > 0.0)) break;
    const bool final_step = plan.t_end && dt >= *plan.t_end - state.time;
    try {
      state = step_with_dt(state, grid, p, cfg, dt);
    } catch (const InstabilityError& e) {
      throw e.at_iter(state.iter + 1);
    }
    if (final_step) state.time = *plan.t_end;
    ++result.steps;
    result.dt_min = std::min(result.dt_min, dt);
    result.dt_max = std::max(result.dt_max, dt);
    if (observer) observer({state.iter, state.time, dt, cfl_ratio(dt, grid, p)});
    if (scheduled(state.iter)) capture(state);
  }
  if (plan.t_end) capture(state);
  return result;
}

}  // namespace dsburgers::godunov

#pragma once

// Orchestration behind the command-line tool: single runs, the two figure
// presets and grid-refinement studies. Each writes its files under cfg.out.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "dsburgers/config.hpp"
#include "dsburgers/godunov.hpp"
#include "dsburgers/io.hpp"
#include "dsburgers/model.hpp"
#include "dsburgers/reference.hpp"

namespace dsburgers::driver {

namespace fs = std::filesystem;

struct RunOutcome {
  io::RunMetadata meta;
  godunov::RunResult result;
  std::optional<InstabilityError> failure;
};

/// Runs one configuration in memory. An instability is caught and recorded
/// in the metadata instead of propagating.
inline RunOutcome simulate(const config::RunConfig& cfg, const godunov::StepObserver& observer = {}) {
  const Params p = cfg.params();
  const Grid grid(cfg.resolved_nx());
  const godunov::SchemeConfig scheme = cfg.scheme();

  godunov::RunPlan plan;
  plan.snapshots = cfg.schedule();
  plan.t_end = cfg.t_end;

  RunOutcome o;
  o.meta.config = config::to_json(cfg);
  o.meta.dt_fixed = cfg.dt;
  o.meta.order = cfg.order;
  o.meta.source_form = std::string(model::to_string(cfg.source_form));
  o.meta.max_char_factor = godunov::max_flux_coefficient(grid, p);
  o.meta.superluminal = o.meta.max_char_factor > p.c();

  const auto start = std::chrono::steady_clock::now();
  try {
    o.result = godunov::run(config::initial_state(cfg, grid), grid, p, scheme, plan, observer);
    o.meta.steps = o.result.steps;
    o.meta.dt_min = o.result.dt_min;
    o.meta.dt_max = o.result.dt_max;
    o.meta.final_time = o.result.snapshots.back().time;
  } catch (const InstabilityError& e) {
    o.failure = e;
    o.meta.status = "instability";
    o.meta.message = e.what();
  }
  o.meta.wall_clock_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return o;
}

/// Writes every snapshot plus metadata.json into `dir`.
inline void write_outcome(const RunOutcome& o, const Grid& grid, const fs::path& dir) {
  io::ensure_directory(dir);
  for (const auto& snap : o.result.snapshots) io::emit_snapshot_csv(snap, grid, dir);
  io::emit_metadata(o.meta, dir / "metadata.json");
}

inline void warn_if_superluminal(const io::RunMetadata& meta, double lambda, std::ostream& diag) {
  if (meta.superluminal)
    diag << "warning: lambda = " << lambda << " gives characteristic factor " << meta.max_char_factor
         << " > c; wave speeds can exceed the speed of light\n";
}

/// Single run. Returns the outcome; the caller decides the exit status.
inline RunOutcome run_single(const config::RunConfig& cfg, std::ostream& data, std::ostream& diag) {
  RunOutcome o = simulate(cfg);
  const Grid grid(cfg.resolved_nx());
  write_outcome(o, grid, cfg.out);
  warn_if_superluminal(o.meta, cfg.lambda, diag);
  for (const auto& snap : o.result.snapshots) data << (fs::path(cfg.out) / io::snapshot_filename(snap.iter)).string() << '\n';
  data << (fs::path(cfg.out) / "metadata.json").string() << '\n';
  if (o.failure) diag << "error: " << o.failure->what() << '\n';
  return o;
}

// ---------------------------------------------------------------------------
// Figure presets

inline const std::vector<long>& preset_checkpoints() {
  static const std::vector<long> k{100, 400, 600, 800};
  return k;
}

/// Level and crossing direction used to locate the tracked wave of a preset:
/// the shock at the midpoint of its jump, the rarefaction at its leading edge
/// (90% of the way from vl to vr).
struct FrontTracker {
  double level = 0.0;
  reference::Crossing direction = reference::Crossing::Any;
};

inline FrontTracker preset_tracker(config::Preset preset) {
  if (preset == config::Preset::Fig2Shock) {
    const auto d = config::kShockPreset;
    return {0.5 * (d.vl + d.vr), reference::Crossing::Falling};
  }
  const auto d = config::kRarefactionPreset;
  return {d.vl + 0.9 * (d.vr - d.vl), reference::Crossing::Rising};
}

/// Step shared by every lambda of a preset: the CFL bound for the worst
/// lambda, scaled by the configured CFL number.
inline double preset_dt(const Grid& grid, const std::vector<double>& lambdas, double c, double cfl) {
  double worst = 0.0;
  for (double lam : lambdas) worst = std::max(worst, godunov::max_flux_coefficient(grid, Params(lam, c)));
  return cfl * grid.dr() / worst;
}

struct PresetRow {
  double lambda = 0.0;
  long iter = 0;
  std::optional<double> front_r;
};

struct PresetReport {
  std::vector<RunOutcome> runs;  // one per lambda, in input order
  std::vector<PresetRow> rows;
  double dt = 0.0;
};

inline std::string lambda_dirname(double lambda) { return "lambda_" + io::format_double(lambda); }

/// The per-lambda configurations of a preset: identical grid, dt, IC and
/// schedule; only lambda differs.
inline std::vector<config::RunConfig> preset_configs(const config::RunConfig& base) {
  const config::Preset preset = base.preset.value_or(config::Preset::Fig2Shock);
  const std::vector<double> lambdas = base.lambdas.empty() ? std::vector<double>{0.0, 1.0} : base.lambdas;
  const Grid grid(base.resolved_nx());
  const double dt = preset_dt(grid, lambdas, base.c, base.cfl);

  std::vector<config::RunConfig> out;
  for (double lam : lambdas) {
    config::RunConfig c = base;
    c.preset = preset;
    c.lambda = lam;
    c.nx = base.resolved_nx();
    c.order = 2;
    c.ic = preset == config::Preset::Fig2Shock ? config::IcKind::Shock : config::IcKind::Rarefaction;
    c.dt = dt;
    c.t_end.reset();
    c.iters.reset();
    c.snapshots = preset_checkpoints();
    c.lambdas = lambdas;
    c.out = (fs::path(base.out) / lambda_dirname(lam)).string();
    out.push_back(c);
  }
  return out;
}

/// Runs a preset for every lambda concurrently and tabulates front positions.
inline PresetReport simulate_preset(const config::RunConfig& base) {
  const auto cfgs = preset_configs(base);
  std::vector<std::future<RunOutcome>> jobs;
  for (const auto& c : cfgs) jobs.push_back(std::async(std::launch::async, [c] { return simulate(c); }));

  PresetReport rep;
  rep.dt = cfgs.empty() ? 0.0 : *cfgs.front().dt;
  const FrontTracker tracker = preset_tracker(*cfgs.front().preset);
  const Grid grid(base.resolved_nx());
  for (std::size_t i = 0; i < cfgs.size(); ++i) {
    rep.runs.push_back(jobs[i].get());
    for (const auto& snap : rep.runs.back().result.snapshots) {
      if (snap.iter == 0) continue;
      PresetRow row{cfgs[i].lambda, snap.iter, std::nullopt};
      try {
        row.front_r = reference::front_position(snap.v, grid, tracker.level, tracker.direction);
      } catch (const DomainError&) {
      }
      rep.rows.push_back(row);
    }
  }
  return rep;
}

inline fs::path emit_summary_csv(const PresetReport& rep, const fs::path& dir) {
  const fs::path path = dir / "summary.csv";
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path.string(), "cannot open for writing");
  out << "lambda,iter,front_r\n";
  for (const auto& row : rep.rows)
    out << io::format_double(row.lambda) << ',' << row.iter << ',' << (row.front_r ? io::format_double(*row.front_r) : "nan")
        << '\n';
  if (!out) throw IoError(path.string(), "write failed");
  return path;
}

inline PresetReport run_preset(const config::RunConfig& base, std::ostream& data, std::ostream& diag) {
  PresetReport rep = simulate_preset(base);
  const auto cfgs = preset_configs(base);
  const Grid grid(base.resolved_nx());
  io::ensure_directory(base.out);
  for (std::size_t i = 0; i < cfgs.size(); ++i) {
    write_outcome(rep.runs[i], grid, cfgs[i].out);
    warn_if_superluminal(rep.runs[i].meta, cfgs[i].lambda, diag);
    if (rep.runs[i].failure) diag << "error: lambda = " << cfgs[i].lambda << ": " << rep.runs[i].failure->what() << '\n';
    data << cfgs[i].out << '\n';
  }
  data << emit_summary_csv(rep, base.out).string() << '\n';
  return rep;
}

// ---------------------------------------------------------------------------
// Convergence study

struct ConvergenceRow {
  std::size_t nx = 0;
  double l1 = 0.0;
  std::optional<double> order;
};

/// Region where the characteristic solution on the whole line also solves the
/// boundary-value problem: cells whose backward characteristics (plus a
/// margin for numerical spreading) stay inside the domain.
inline std::pair<double, double> classical_valid_window(const reference::SmoothProfile& prof, double t,
                                                        const Grid& grid, double margin = 0.1) {
  const double into_left = std::max(0.0, prof.max_value) * t;
  const double into_right = std::max(0.0, -prof.min_value) * t;
  return {grid.r_min() + into_left + margin, grid.r_max() - into_right - margin};
}

/// Runs each resolution to t_end and compares with the applicable oracle:
/// the characteristic solution for lambda = 0 smooth data, the static
/// solution for static data.
inline std::vector<ConvergenceRow> convergence_study(const config::RunConfig& base) {
  const std::vector<std::size_t>& nxs = base.convergence;
  if (nxs.size() < 2) throw ConfigError(ConfigErrc::Invalid, "convergence", "need at least two resolutions");
  for (std::size_t i = 1; i < nxs.size(); ++i)
    if (nxs[i] != 2 * nxs[i - 1])
      throw ConfigError(ConfigErrc::Invalid, "convergence", "each resolution must double the previous one");

  const bool smooth = base.ic == config::IcKind::Smooth && base.lambda == 0.0;
  const bool stat = base.ic == config::IcKind::Static;
  if (!smooth && !stat)
    throw ConfigError(ConfigErrc::Invalid, "ic",
                      "convergence studies need smooth data with lambda = 0 or static data");
  if (base.dt) throw ConfigError(ConfigErrc::Invalid, "dt", "convergence studies use adaptive steps");

  const double t_end = base.t_end.value_or(smooth ? 0.1 : 0.5);
  const Params p = base.params();

  std::vector<ConvergenceRow> rows;
  for (std::size_t nx : nxs) {
    config::RunConfig c = base;
    c.nx = nx;
    c.t_end = t_end;
    c.iters.reset();
    c.snapshots.clear();
    RunOutcome o = simulate(c);
    if (o.failure) throw *o.failure;
    const Grid grid(nx);
    const auto& v = o.result.snapshots.back().v;
    reference::ErrorReport err;
    if (smooth) {
      const auto prof = c.smooth_profile();
      const auto [lo, hi] = classical_valid_window(prof, t_end, grid);
      err = reference::error_norms(v, [&](double r) { return reference::exact_smooth_classical(prof, t_end, r); }, grid,
                                   lo, hi);
    } else {
      const model::StaticSolutionSpec spec(p, c.static_n, c.static_sign);
      err = reference::error_norms(v, [&](double r) { return model::static_solution(p, spec, r); }, grid);
    }
    ConvergenceRow row{nx, err.l1, std::nullopt};
    if (!rows.empty()) row.order = reference::observed_order(rows.back().l1, err.l1);
    rows.push_back(row);
  }
  return rows;
}

inline fs::path emit_convergence_csv(const std::vector<ConvergenceRow>& rows, const fs::path& dir) {
  io::ensure_directory(dir);
  const fs::path path = dir / "convergence.csv";
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path.string(), "cannot open for writing");
  out << "nx,l1,order\n";
  for (const auto& row : rows)
    out << row.nx << ',' << io::format_double(row.l1) << ',' << (row.order ? io::format_double(*row.order) : "") << '\n';
  if (!out) throw IoError(path.string(), "write failed");
  return path;
}

}  // namespace dsburgers::driver

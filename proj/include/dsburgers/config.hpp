#pragma once

// Run configuration: defaults, overridden by a JSON config file, overridden by
// command-line flags.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dsburgers/errors.hpp"
#include "dsburgers/godunov.hpp"
#include "dsburgers/grid.hpp"
#include "dsburgers/io.hpp"
#include "dsburgers/model.hpp"
#include "dsburgers/params.hpp"
#include "dsburgers/reference.hpp"

namespace dsburgers::config {

enum class IcKind { Shock, Rarefaction, Static, Riemann, Smooth, File };

inline std::string_view to_string(IcKind k) {
  switch (k) {
    case IcKind::Shock: return "shock";
    case IcKind::Rarefaction: return "rarefaction";
    case IcKind::Static: return "static";
    case IcKind::Riemann: return "riemann";
    case IcKind::Smooth: return "smooth";
    case IcKind::File: return "file";
  }
  return "shock";
}

inline IcKind ic_from_string(std::string_view s) {
  for (IcKind k : {IcKind::Shock, IcKind::Rarefaction, IcKind::Static, IcKind::Riemann, IcKind::Smooth, IcKind::File})
    if (to_string(k) == s) return k;
  throw ConfigError(ConfigErrc::Invalid, "ic", "unknown initial condition '" + std::string(s) + "'");
}

enum class Preset { Fig1Rarefaction, Fig2Shock };

inline std::string_view to_string(Preset p) { return p == Preset::Fig1Rarefaction ? "fig1-rarefaction" : "fig2-shock"; }

inline Preset preset_from_string(std::string_view s) {
  if (s == "fig1-rarefaction") return Preset::Fig1Rarefaction;
  if (s == "fig2-shock") return Preset::Fig2Shock;
  throw ConfigError(ConfigErrc::Invalid, "preset", "unknown preset '" + std::string(s) + "'");
}

// Riemann presets; the jump location and states are our own choice.
inline constexpr reference::RiemannData kShockPreset{0.8, 0.2, 0.3};
inline constexpr reference::RiemannData kRarefactionPreset{0.2, 0.8, 0.3};

inline constexpr std::size_t kDefaultNx = 200;
inline constexpr std::size_t kPresetNx = 2000;
inline constexpr long kDefaultIters = 100;

struct RunConfig {
  double lambda = 0.0;
  double c = 1.0;
  std::optional<std::size_t> nx;  // empty: 200 for single runs, 2000 for presets
  int order = 2;
  double cfl = 0.9;
  model::SourceForm source_form = model::SourceForm::Conservative;
  godunov::Limiter limiter = godunov::Limiter::Minmod;

  IcKind ic = IcKind::Shock;
  double vl = kShockPreset.vl;
  double vr = kShockPreset.vr;
  double r0 = kShockPreset.r0;
  double static_n = 0.5;
  int static_sign = 1;
  double smooth_mean = 0.5;
  double smooth_amp = 0.25;
  std::string ic_file;

  std::optional<long> iters;
  std::optional<double> t_end;
  std::vector<long> snapshots;
  std::optional<double> dt;

  std::string out;
  std::optional<Preset> preset;
  std::vector<double> lambdas;           // preset lambda list; empty means {0, 1}
  std::vector<std::size_t> convergence;  // nx list for a convergence study
  std::uint64_t seed = 0;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;

  std::size_t resolved_nx() const { return nx.value_or(preset ? kPresetNx : kDefaultNx); }
  Params params() const { return Params(lambda, c); }

  godunov::SchemeConfig scheme() const {
    godunov::SchemeConfig s;
    s.order = order;
    s.cfl_number = cfl;
    s.source_form = source_form;
    s.limiter = limiter;
    s.fixed_dt = dt;
    return s;
  }

  /// Snapshot iterations for a single run; iteration 0 is always included.
  std::vector<long> schedule() const {
    std::vector<long> s = snapshots;
    if (s.empty() && !t_end) s.push_back(iters.value_or(kDefaultIters));
    if (s.empty() || s.front() != 0) s.insert(s.begin(), 0);
    return s;
  }

  reference::SmoothProfile smooth_profile() const {
    return reference::sine_profile(smooth_mean, smooth_amp, 2.0 * std::numbers::pi);
  }
};

// ---------------------------------------------------------------------------
// JSON representation (config files and the metadata echo)

inline nlohmann::json to_json(const RunConfig& c) {
  using nlohmann::json;
  json j;
  j["lambda"] = c.lambda;
  j["c"] = c.c;
  j["nx"] = c.nx ? json(*c.nx) : json(nullptr);
  j["order"] = c.order;
  j["cfl"] = c.cfl;
  j["source_form"] = std::string(model::to_string(c.source_form));
  j["limiter"] = std::string(godunov::to_string(c.limiter));
  j["ic"] = std::string(to_string(c.ic));
  j["vl"] = c.vl;
  j["vr"] = c.vr;
  j["r0"] = c.r0;
  j["static_n"] = c.static_n;
  j["static_sign"] = c.static_sign;
  j["smooth_mean"] = c.smooth_mean;
  j["smooth_amp"] = c.smooth_amp;
  j["ic_file"] = c.ic_file;
  j["iters"] = c.iters ? json(*c.iters) : json(nullptr);
  j["t_end"] = c.t_end ? json(*c.t_end) : json(nullptr);
  j["snapshots"] = c.snapshots;
  j["dt"] = c.dt ? json(*c.dt) : json(nullptr);
  j["out"] = c.out;
  j["preset"] = c.preset ? json(std::string(to_string(*c.preset))) : json(nullptr);
  j["lambdas"] = c.lambdas;
  j["convergence"] = c.convergence;
  j["seed"] = c.seed;
  return j;
}

namespace detail {

template <class T>
T get_as(const nlohmann::json& v, const std::string& key) {
  try {
    return v.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError(ConfigErrc::Invalid, key, "wrong value type");
  }
}

template <class T>
std::optional<T> get_optional(const nlohmann::json& v, const std::string& key) {
  if (v.is_null()) return std::nullopt;
  return get_as<T>(v, key);
}

}  // namespace detail

/// Applies every key of a JSON object onto `cfg`; unknown keys are rejected.
inline void apply_json(RunConfig& cfg, const nlohmann::json& j) {
  using detail::get_as;
  using detail::get_optional;
  if (!j.is_object()) throw ConfigError(ConfigErrc::MalformedFile, "", "config must be a JSON object");
  for (const auto& [key, v] : j.items()) {
    if (key == "lambda") cfg.lambda = get_as<double>(v, key);
    else if (key == "c") cfg.c = get_as<double>(v, key);
    else if (key == "nx") {
      const auto n = get_optional<long>(v, key);
      if (n && *n <= 0) throw ConfigError(ConfigErrc::Invalid, key, "must be positive");
      cfg.nx = n ? std::optional<std::size_t>(static_cast<std::size_t>(*n)) : std::nullopt;
    }
    else if (key == "order") cfg.order = get_as<int>(v, key);
    else if (key == "cfl") cfg.cfl = get_as<double>(v, key);
    else if (key == "source_form") cfg.source_form = model::source_form_from_string(get_as<std::string>(v, key));
    else if (key == "limiter") cfg.limiter = godunov::limiter_from_string(get_as<std::string>(v, key));
    else if (key == "ic") cfg.ic = ic_from_string(get_as<std::string>(v, key));
    else if (key == "vl") cfg.vl = get_as<double>(v, key);
    else if (key == "vr") cfg.vr = get_as<double>(v, key);
    else if (key == "r0") cfg.r0 = get_as<double>(v, key);
    else if (key == "static_n") cfg.static_n = get_as<double>(v, key);
    else if (key == "static_sign") cfg.static_sign = get_as<int>(v, key);
    else if (key == "smooth_mean") cfg.smooth_mean = get_as<double>(v, key);
    else if (key == "smooth_amp") cfg.smooth_amp = get_as<double>(v, key);
    else if (key == "ic_file") cfg.ic_file = get_as<std::string>(v, key);
    else if (key == "iters") cfg.iters = get_optional<long>(v, key);
    else if (key == "t_end") cfg.t_end = get_optional<double>(v, key);
    else if (key == "snapshots") cfg.snapshots = get_as<std::vector<long>>(v, key);
    else if (key == "dt") cfg.dt = get_optional<double>(v, key);
    else if (key == "out") cfg.out = get_as<std::string>(v, key);
    else if (key == "preset") {
      const auto p = get_optional<std::string>(v, key);
      cfg.preset = p ? std::optional<Preset>(preset_from_string(*p)) : std::nullopt;
    }
    else if (key == "lambdas") cfg.lambdas = get_as<std::vector<double>>(v, key);
    else if (key == "convergence") cfg.convergence = get_as<std::vector<std::size_t>>(v, key);
    else if (key == "seed") cfg.seed = get_as<std::uint64_t>(v, key);
    else throw ConfigError(ConfigErrc::UnknownKey, key, "unknown configuration key");
  }
}

inline nlohmann::json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(ConfigErrc::MalformedFile, "config", "cannot read " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(ConfigErrc::MalformedFile, "config", path.string() + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Initial data and validation

/// Cell values of the configured initial condition on `grid`.
inline State initial_state(const RunConfig& cfg, const Grid& grid) {
  const Params p = cfg.params();
  switch (cfg.ic) {
    case IcKind::Shock:
    case IcKind::Rarefaction:
    case IcKind::Riemann: {
      const reference::RiemannData d = cfg.ic == IcKind::Shock         ? kShockPreset
                                       : cfg.ic == IcKind::Rarefaction ? kRarefactionPreset
                                                                       : reference::RiemannData{cfg.vl, cfg.vr, cfg.r0};
      return sample_state(grid, [&](double r) { return r < d.r0 ? d.vl : d.vr; });
    }
    case IcKind::Static: {
      const model::StaticSolutionSpec spec(p, cfg.static_n, cfg.static_sign, grid.r_min(), grid.r_max());
      return sample_state(grid, [&](double r) { return model::static_solution(p, spec, r); });
    }
    case IcKind::Smooth: {
      const auto prof = cfg.smooth_profile();
      return sample_state(grid, prof.value);
    }
    case IcKind::File: {
      if (cfg.ic_file.empty()) throw ConfigError(ConfigErrc::Invalid, "ic_file", "required for --ic file");
      const io::CsvProfile prof = io::read_profile_csv(cfg.ic_file);
      if (prof.v.size() != grid.nx())
        throw ConfigError(ConfigErrc::Invalid, "ic_file",
                          "has " + std::to_string(prof.v.size()) + " rows, grid has " + std::to_string(grid.nx()));
      State s;
      s.v = prof.v;
      return s;
    }
  }
  return {};
}

/// Re-checks every solver and model invariant the configuration touches.
inline void validate(const RunConfig& cfg) {
  const Params p = cfg.params();
  const Grid grid(cfg.resolved_nx());
  if (cfg.iters && *cfg.iters < 0) throw ConfigError(ConfigErrc::Invalid, "iters", "must be non-negative");
  if (cfg.iters && cfg.t_end) throw ConfigError(ConfigErrc::Invalid, "t_end", "give either iters or t_end");
  if (cfg.t_end && !(*cfg.t_end >= 0.0)) throw ConfigError(ConfigErrc::Invalid, "t_end", "must be non-negative");
  for (std::size_t i = 0; i < cfg.snapshots.size(); ++i)
    if (cfg.snapshots[i] < 0 || (i > 0 && cfg.snapshots[i] <= cfg.snapshots[i - 1]))
      throw ConfigError(ConfigErrc::Invalid, "snapshots", "must be non-negative and strictly increasing");
  if (cfg.ic == IcKind::Riemann && !(cfg.r0 >= grid.r_min() && cfg.r0 <= grid.r_max()))
    throw ConfigError(ConfigErrc::Invalid, "r0", "jump must lie inside the domain");
  for (std::size_t i = 1; i < cfg.convergence.size(); ++i)
    if (cfg.convergence[i] != 2 * cfg.convergence[i - 1])
      throw ConfigError(ConfigErrc::Invalid, "convergence", "each resolution must double the previous one");
  const State s = initial_state(cfg, grid);
  if (!cfg.preset) godunov::validate(cfg.scheme(), grid, p, s.v);
  else if (cfg.order != 1 && cfg.order != 2) throw ConfigError(ConfigErrc::Invalid, "order", "must be 1 or 2");
}

// ---------------------------------------------------------------------------
// Command line

namespace detail {

template <class T>
std::vector<T> split_list(const std::string& s, const std::string& key) {
  std::vector<T> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::istringstream is(item);
    T x{};
    if (!(is >> x) || !is.eof()) throw ConfigError(ConfigErrc::Usage, key, "bad list entry '" + item + "'");
    out.push_back(x);
  }
  return out;
}

}  // namespace detail

/// Builds the flag parser; flags bind to optionals so unset ones leave lower
/// layers (file, defaults) untouched.
struct CommandLine {
  CLI::App app{"Godunov finite-volume solver for the relativistic Burgers equation on de Sitter spacetime",
               "dsburgers"};

  std::optional<std::string> config_file;
  std::optional<double> lambda, c, cfl, vl, vr, r0, static_n, smooth_mean, smooth_amp, t_end, dt;
  std::optional<long> nx, iters;
  std::optional<int> order, static_sign;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> source_form, limiter, ic, ic_file, snapshots, out, preset, lambdas, convergence;

  CommandLine() {
    app.add_option("--config", config_file, "JSON config file (flags override it)");
    app.add_option("--lambda", lambda, "cosmological constant");
    app.add_option("--c", c, "light speed (default 1)");
    app.add_option("--nx", nx, "number of cells");
    app.add_option("--order", order, "scheme order, 1 or 2");
    app.add_option("--cfl", cfl, "CFL number in (0, 1]");
    app.add_option("--source-form", source_form, "conservative | paper");
    app.add_option("--limiter", limiter, "minmod | none");
    app.add_option("--ic", ic, "shock | rarefaction | static | riemann | smooth | file");
    app.add_option("--vl", vl, "left state (riemann)");
    app.add_option("--vr", vr, "right state (riemann)");
    app.add_option("--r0", r0, "jump location (riemann)");
    app.add_option("--static-n", static_n, "static solution constant N");
    app.add_option("--static-sign", static_sign, "static solution branch, 1 or -1");
    app.add_option("--smooth-mean", smooth_mean, "mean of the smooth sine profile");
    app.add_option("--smooth-amp", smooth_amp, "amplitude of the smooth sine profile");
    app.add_option("--ic-file", ic_file, "CSV with header r,v (ic = file)");
    auto* it = app.add_option("--iters", iters, "number of iterations");
    app.add_option("--t-end", t_end, "final time (adaptive or fixed dt)")->excludes(it);
    app.add_option("--snapshots", snapshots, "comma separated snapshot iterations");
    app.add_option("--dt", dt, "fixed time step");
    app.add_option("--out", out, "output directory (default $DSBURGERS_OUT or ./dsburgers_out)");
    app.add_option("--preset", preset, "fig1-rarefaction | fig2-shock");
    app.add_option("--lambdas", lambdas, "comma separated lambda list for presets");
    app.add_option("--convergence", convergence, "comma separated nx list for a convergence study");
    app.add_option("--seed", seed, "seed recorded with the run");
  }

  void apply(RunConfig& cfg) const {
    if (lambda) cfg.lambda = *lambda;
    if (c) cfg.c = *c;
    if (nx) {
      if (*nx <= 0) throw ConfigError(ConfigErrc::Invalid, "nx", "must be positive");
      cfg.nx = static_cast<std::size_t>(*nx);
    }
    if (order) cfg.order = *order;
    if (cfl) cfg.cfl = *cfl;
    if (source_form) cfg.source_form = model::source_form_from_string(*source_form);
    if (limiter) cfg.limiter = godunov::limiter_from_string(*limiter);
    if (ic) cfg.ic = ic_from_string(*ic);
    if (vl) cfg.vl = *vl;
    if (vr) cfg.vr = *vr;
    if (r0) cfg.r0 = *r0;
    if (static_n) cfg.static_n = *static_n;
    if (static_sign) cfg.static_sign = *static_sign;
    if (smooth_mean) cfg.smooth_mean = *smooth_mean;
    if (smooth_amp) cfg.smooth_amp = *smooth_amp;
    if (ic_file) cfg.ic_file = *ic_file;
    // iters and t_end are alternatives; a flag for one clears the other from the file
    if (iters) { cfg.iters = *iters; cfg.t_end.reset(); }
    if (t_end) { cfg.t_end = *t_end; cfg.iters.reset(); }
    if (snapshots) cfg.snapshots = detail::split_list<long>(*snapshots, "snapshots");
    if (dt) cfg.dt = *dt;
    if (out) cfg.out = *out;
    if (preset) cfg.preset = preset_from_string(*preset);
    if (lambdas) cfg.lambdas = detail::split_list<double>(*lambdas, "lambdas");
    if (convergence) cfg.convergence = detail::split_list<std::size_t>(*convergence, "convergence");
    if (seed) cfg.seed = *seed;
  }
};

inline std::string default_output_dir() {
  if (const char* env = std::getenv("DSBURGERS_OUT"); env && *env) return env;
  return "dsburgers_out";
}

/// Parses flags (and the optional --config file), merges them over defaults
/// and validates the result. Throws ConfigError on any failure; a --help
/// request surfaces as CLI::CallForHelp.
inline RunConfig parse_config(int argc, const char* const* argv) {
  CommandLine cl;
  try {
    cl.app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(ConfigErrc::Usage, "", e.what());
  }
  RunConfig cfg;
  cfg.out = default_output_dir();
  if (cl.config_file) apply_json(cfg, load_json_file(*cl.config_file));
  cl.apply(cfg);
  validate(cfg);
  return cfg;
}

inline RunConfig parse_config(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"dsburgers"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return parse_config(static_cast<int>(argv.size()), argv.data());
}

}  // namespace dsburgers::config

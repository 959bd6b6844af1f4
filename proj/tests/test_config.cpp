#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "dsburgers/config.hpp"
#include "dsburgers/exit_codes.hpp"

namespace dsburgers::config {
namespace {

namespace fs = std::filesystem;

fs::path write_file(const std::string& name, const std::string& text) {
  const fs::path p = fs::temp_directory_path() / ("dsburgers_cfg_" + std::to_string(::getpid()) + "_" + name);
  std::ofstream(p) << text;
  return p;
}

template <class Fn>
ConfigErrc config_code(Fn&& fn) {
  try {
    fn();
  } catch (const ConfigError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no ConfigError thrown";
  return ConfigErrc::Usage;
}

TEST(ParseConfig, DefaultsFilledIn) {
  const RunConfig cfg = parse_config({"--lambda", "1", "--nx", "200", "--order", "2", "--ic", "shock"});
  EXPECT_EQ(cfg.lambda, 1.0);
  EXPECT_EQ(cfg.c, 1.0);
  EXPECT_EQ(cfg.resolved_nx(), 200u);
  EXPECT_EQ(cfg.order, 2);
  EXPECT_EQ(cfg.cfl, 0.9);
  EXPECT_EQ(cfg.source_form, model::SourceForm::Conservative);
  EXPECT_EQ(cfg.limiter, godunov::Limiter::Minmod);
  EXPECT_EQ(cfg.ic, IcKind::Shock);
  EXPECT_FALSE(cfg.dt.has_value());
  EXPECT_EQ(cfg.schedule(), (std::vector<long>{0, 100}));
}

TEST(ParseConfig, NegativeStaticRadicandIsDomainError) {
  try {
    parse_config({"--lambda", "1", "--ic", "static", "--static-n", "2.0"});
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), DomainErrc::NegativeRadicand);
    EXPECT_EQ(exit_code_for(e), kExitDomain);
  }
}

TEST(ParseConfig, OrderThreeInFileIsInvalid) {
  const auto path = write_file("order3.json", R"({"order": 3})");
  try {
    parse_config({"--config", path.string()});
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.code(), ConfigErrc::Invalid);
    EXPECT_EQ(e.key(), "order");
    EXPECT_EQ(exit_code_for(e), kExitInvalidValue);
  }
  fs::remove(path);
}

TEST(ParseConfig, UnknownKeyNamed) {
  const auto path = write_file("unknown.json", R"({"lambda": 1, "lamda": 2})");
  try {
    parse_config({"--config", path.string()});
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.code(), ConfigErrc::UnknownKey);
    EXPECT_NE(std::string(e.what()).find("lamda"), std::string::npos);
    EXPECT_EQ(exit_code_for(e), kExitUnknownKey);
  }
  fs::remove(path);
}

TEST(ParseConfig, MalformedAndMissingFiles) {
  const auto path = write_file("broken.json", "{\"lambda\": ");
  EXPECT_EQ(config_code([&] { parse_config({"--config", path.string()}); }), ConfigErrc::MalformedFile);
  EXPECT_EQ(config_code([&] { parse_config({"--config", "/no/such/file.json"}); }), ConfigErrc::MalformedFile);
  fs::remove(path);
}

TEST(ParseConfig, WrongTypeInFile) {
  const auto path = write_file("type.json", R"({"nx": "many"})");
  EXPECT_EQ(config_code([&] { parse_config({"--config", path.string()}); }), ConfigErrc::Invalid);
  fs::remove(path);
}

TEST(ParseConfig, FlagsOverrideFile) {
  const auto path = write_file("override.json", R"({"lambda": 0.5, "nx": 300, "iters": 7})");
  const RunConfig cfg = parse_config({"--config", path.string(), "--lambda", "1"});
  EXPECT_EQ(cfg.lambda, 1.0);
  EXPECT_EQ(cfg.resolved_nx(), 300u);
  EXPECT_EQ(cfg.iters, 7);
  const RunConfig t = parse_config({"--config", path.string(), "--t-end", "0.2"});
  EXPECT_FALSE(t.iters.has_value());
  EXPECT_EQ(t.t_end, 0.2);
  fs::remove(path);
}

TEST(ParseConfig, UsageErrors) {
  EXPECT_EQ(config_code([] { parse_config({"--bogus"}); }), ConfigErrc::Usage);
  EXPECT_EQ(config_code([] { parse_config({"--nx", "abc"}); }), ConfigErrc::Usage);
  EXPECT_EQ(config_code([] { parse_config({"--iters", "5", "--t-end", "1"}); }), ConfigErrc::Usage);
  EXPECT_EQ(config_code([] { parse_config({"--snapshots", "1,x"}); }), ConfigErrc::Usage);
}

TEST(ParseConfig, InvariantViolations) {
  EXPECT_EQ(config_code([] { parse_config({"--cfl", "1.5"}); }), ConfigErrc::Invalid);
  EXPECT_EQ(config_code([] { parse_config({"--c", "0"}); }), ConfigErrc::Invalid);
  EXPECT_EQ(config_code([] { parse_config({"--nx", "2"}); }), ConfigErrc::Invalid);
  EXPECT_EQ(config_code([] { parse_config({"--snapshots", "10,5"}); }), ConfigErrc::Invalid);
  EXPECT_EQ(config_code([] { parse_config({"--source-form", "fancy"}); }), ConfigErrc::Invalid);
  EXPECT_EQ(config_code([] { parse_config({"--ic", "riemann", "--r0", "1.5"}); }), ConfigErrc::Invalid);
  EXPECT_EQ(config_code([] { parse_config({"--nx", "100", "--dt", "0.02"}); }), ConfigErrc::Invalid);
  EXPECT_EQ(config_code([] { parse_config({"--convergence", "100,150"}); }), ConfigErrc::Invalid);
  EXPECT_EQ(config_code([] { parse_config({"--ic", "file"}); }), ConfigErrc::Invalid);
}

TEST(ParseConfig, EchoRoundTrip) {
  const RunConfig cfg = parse_config({"--lambda", "0.75", "--nx", "128", "--order", "1", "--source-form", "paper",
                                      "--ic", "riemann", "--vl", "-0.25", "--vr", "0.6", "--r0", "0.4", "--snapshots",
                                      "3,9", "--dt", "0.001", "--lambdas", "0,0.5", "--seed", "42", "--limiter", "none"});
  RunConfig back;
  apply_json(back, nlohmann::json::parse(to_json(cfg).dump()));
  EXPECT_EQ(back, cfg);
  RunConfig preset = parse_config({"--preset", "fig1-rarefaction", "--t-end", "0.3"});
  RunConfig back2;
  apply_json(back2, to_json(preset));
  EXPECT_EQ(back2, preset);
}

TEST(ParseConfig, OutputDirectoryFromEnvironment) {
  ::setenv("DSBURGERS_OUT", "/tmp/from_env", 1);
  EXPECT_EQ(parse_config(std::vector<std::string>{}).out, "/tmp/from_env");
  EXPECT_EQ(parse_config({"--out", "/tmp/from_flag"}).out, "/tmp/from_flag");
  ::unsetenv("DSBURGERS_OUT");
  EXPECT_EQ(parse_config(std::vector<std::string>{}).out, "dsburgers_out");
}

TEST(InitialState, Kinds) {
  const Grid grid(10);
  RunConfig cfg;
  cfg.ic = IcKind::Rarefaction;
  const State r = initial_state(cfg, grid);
  EXPECT_EQ(r.v.front(), 0.2);
  EXPECT_EQ(r.v.back(), 0.8);
  cfg.ic = IcKind::Static;
  cfg.lambda = 1.0;
  const State s = initial_state(cfg, grid);
  EXPECT_DOUBLE_EQ(s.v[0], std::sqrt(1.0 - 0.5 * (1.0 - grid.center(0) * grid.center(0))));
  cfg.ic = IcKind::Smooth;
  const State m = initial_state(cfg, grid);
  EXPECT_DOUBLE_EQ(m.v[0], 0.5 + 0.25 * std::sin(2.0 * std::numbers::pi * grid.center(0)));
}

TEST(InitialState, FromFile) {
  const auto path = write_file("ic.csv", "r,v\n0.125,1\n0.375,2\n0.625,3\n0.875,4\n");
  RunConfig cfg;
  cfg.ic = IcKind::File;
  cfg.ic_file = path.string();
  EXPECT_EQ(initial_state(cfg, Grid(4)).v, (std::vector<double>{1, 2, 3, 4}));
  EXPECT_THROW(initial_state(cfg, Grid(5)), ConfigError);
  fs::remove(path);
}

}  // namespace
}  // namespace dsburgers::config

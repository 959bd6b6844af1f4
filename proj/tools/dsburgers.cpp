// Command-line driver: single runs, figure presets and convergence studies.
// Data paths go to stdout, warnings and errors to stderr.

#include <iostream>

#include "dsburgers.hpp"

namespace {

int run_main(int argc, char** argv) {
  using namespace dsburgers;
  config::RunConfig cfg;
  try {
    cfg = config::parse_config(argc, argv);
  } catch (const CLI::CallForHelp&) {
    config::CommandLine cl;
    std::cout << cl.app.help();
    return kExitOk;
  }

  if (!cfg.convergence.empty()) {
    const auto rows = driver::convergence_study(cfg);
    std::cout << driver::emit_convergence_csv(rows, cfg.out).string() << '\n';
    for (const auto& row : rows) {
      std::cerr << "nx " << row.nx << "  l1 " << row.l1;
      if (row.order) std::cerr << "  order " << *row.order;
      std::cerr << '\n';
    }
    return kExitOk;
  }

  if (cfg.preset) {
    const auto rep = driver::run_preset(cfg, std::cout, std::cerr);
    for (const auto& run : rep.runs)
      if (run.failure) return kExitInstability;
    return kExitOk;
  }

  const auto outcome = driver::run_single(cfg, std::cout, std::cerr);
  return outcome.failure ? kExitInstability : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_main(argc, argv);
  } catch (const dsburgers::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return dsburgers::exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

// expmart: batch runner for the verification suites.
//
// Exit status: 0 all cases pass, 1 a case failed, 2 bad config or usage,
// 3 an exponential evaluation overflowed.

#include <CLI11.hpp>
#include <iostream>

#include "expmart/errors.hpp"
#include "expmart_cli/config.hpp"
#include "expmart_cli/report.hpp"
#include "expmart_cli/runner.hpp"

namespace {

constexpr const char* kSubcommands[][2] = {
    {"check-algebra", "exact operator identities"},
    {"lemma2", "exponential martingale inner products, exact and Monte Carlo"},
    {"isometry", "Ito isometry on simulated paths"},
    {"h1", "fixed-time uncertainty inequality, exact"},
    {"h2", "stochastic-integral uncertainty inequality, Monte Carlo"},
    {"pde", "finite-difference residual of the backward heat equation"},
    {"l2limit", "L2 convergence of the difference quotient to multiplication by X"},
    {"all", "every suite"},
};

}  // namespace

int main(int argc, char** argv) {
  using namespace expmart::cli;

  CLI::App app{"Verification runner for exponential-martingale operator identities"};
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> paths;
  std::optional<std::size_t> grid;
  std::optional<unsigned> workers;
  std::optional<std::string> out_dir;
  std::optional<std::string> preset;

  app.add_option("--config", config_path, "INI config file")->check(CLI::ExistingFile);
  app.add_option("--seed", seed, "RNG seed");
  app.add_option("--paths", paths, "Monte Carlo paths N");
  app.add_option("--grid", grid, "grid steps M");
  app.add_option("--workers", workers, "worker threads (results do not depend on it)");
  app.add_option("--out-dir", out_dir, "directory for report.csv and report.json");
  app.add_option("--preset", preset, "run a single named case");
  app.require_subcommand(0, 1);
  for (const auto& [name, desc] : kSubcommands) app.add_subcommand(name, desc)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    RunConfig cfg = config_path.empty() ? RunConfig{} : load_config(config_path);
    if (!app.get_subcommands().empty()) cfg.suites = suites_for_subcommand(app.get_subcommands().front()->get_name());
    if (seed) cfg.seed = *seed;
    if (paths) cfg.paths = *paths;
    if (grid) cfg.grid = *grid;
    if (workers) cfg.workers = *workers;
    if (out_dir) cfg.out_dir = *out_dir;
    if (preset) cfg.preset = *preset;

    if (cfg.suites.empty()) {
      std::cerr << "no suite selected: give a subcommand or set [run] suite in the config\n\n" << app.help();
      return 2;
    }
    validate(cfg);

    const RunResult result = run_suites(cfg);
    write_reports(result, cfg);
    print_summary(result, std::cout);
    return result.status();
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

#include <cmath>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "owc/errors.hpp"
#include "owc/format.hpp"
#include "owc/grid.hpp"
#include "owc/runner.hpp"
#include "owc/scenario.hpp"

#ifdef OWC_HAVE_OPENMP
#include <omp.h>
#endif

namespace {

struct CommonOpts {
  std::string scenario_path;
  std::string out_dir = ".";
  bool serial = false;
  int threads = 0;
  double width = 1.0;
  double crest_threshold = 0.5;
};

void add_run_options(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("scenario", opts.scenario_path, "scenario file (key=value lines)")
      ->required();
  cmd->add_option("--out", opts.out_dir, "output directory")->required();
  cmd->add_flag("--serial", opts.serial, "disable the parallel sweep");
  cmd->add_option("--threads", opts.threads, "worker thread count (0 = library default)");
  cmd->add_option("--width", opts.width, "projected device width for the power report");
  cmd->add_option("--crest-threshold", opts.crest_threshold,
                  "crest arrival when zeta exceeds this fraction of the amplitude");
}

owc::RunnerOptions runner_options(const CommonOpts& opts) {
  owc::RunnerOptions ro;
  ro.policy = opts.serial ? owc::ExecPolicy::Serial : owc::ExecPolicy::Parallel;
  ro.width = opts.width;
  ro.crest_threshold = opts.crest_threshold;
#ifdef OWC_HAVE_OPENMP
  if (opts.threads > 0) omp_set_num_threads(opts.threads);
#endif
  return ro;
}

int validate_command(const std::string& path) {
  const owc::Scenario sc = owc::load_scenario(path);
  const owc::Grid grid = owc::build_grid(sc.physical, sc.dx);
  const owc::TimeControls tc =
      owc::make_controls(sc.physical, sc.dx, sc.cfl, sc.t_end);
  std::printf("scenario OK: mode=%s\n", owc::to_string(sc.mode));
  std::printf("  grid: n1=%d n2=%d n3=%d n4=%d (%d nodes), dx=%s\n", grid.n1,
              grid.n2, grid.n3, grid.n4, grid.total_nodes(),
              owc::gshort(grid.dx).c_str());
  std::printf("  dt=%s, %lld steps to t_end=%s\n", owc::gshort(tc.dt).c_str(),
              std::llround(std::ceil(tc.t_end / tc.dt - 1e-9)),
              owc::gshort(tc.t_end).c_str());
  std::printf("  step height s=%s, wetted depth h_w=%s\n",
              owc::gshort(sc.physical.step_height()).c_str(),
              owc::gshort(sc.physical.wetted_depth()).c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shallow-water simulator for an oscillating water column wave energy converter"};
  app.require_subcommand(1);

  CommonOpts run_opts;
  CLI::App* run_cmd = app.add_subcommand("run", "run a scenario");
  add_run_options(run_cmd, run_opts);

  std::string validate_path;
  CLI::App* validate_cmd =
      app.add_subcommand("validate", "check a scenario file and report derived quantities");
  validate_cmd->add_option("scenario", validate_path, "scenario file")->required();

  CommonOpts compare_opts;
  std::vector<double> step_heights;
  CLI::App* compare_cmd = app.add_subcommand(
      "compare", "run the step/no-step comparison regardless of the scenario mode");
  add_run_options(compare_cmd, compare_opts);
  compare_cmd
      ->add_option("--step-heights", step_heights,
                   "two step heights to compare (default: 0 and h_s-h_0)")
      ->delimiter(',')
      ->expected(2);

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate_cmd->parsed()) {
      return validate_command(validate_path);
    }
    if (run_cmd->parsed()) {
      const owc::Scenario sc = owc::load_scenario(run_opts.scenario_path);
      owc::run_scenario(sc, run_opts.out_dir, runner_options(run_opts));
      return 0;
    }
    owc::Scenario sc = owc::load_scenario(compare_opts.scenario_path);
    sc.mode = owc::RunMode::compare_step;
    owc::RunnerOptions ro = runner_options(compare_opts);
    if (!step_heights.empty()) {
      ro.step_heights = std::make_pair(step_heights[0], step_heights[1]);
    }
    owc::run_scenario(sc, compare_opts.out_dir, ro);
    return 0;
  } catch (const owc::ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const owc::NumericalError& e) {
    std::fprintf(stderr, "numerical abort: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}

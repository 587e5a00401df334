#pragma once

#include <optional>
#include <string>
#include <utility>

#include "owc/kernels.hpp"
#include "owc/scenario.hpp"

namespace owc {

struct RunnerOptions {
  // Parallel falls back to the serial sweep when OpenMP is unavailable;
  // both produce bitwise identical states.
  ExecPolicy policy = ExecPolicy::Parallel;
  double width = 1.0;            // projected device width for the power report
  double crest_threshold = 0.5;  // arrival when zeta first exceeds threshold*A
  // compare_step variants; defaults to {0, h_s - h_0} from the scenario.
  std::optional<std::pair<double, double>> step_heights;
};

// Executes the scenario and writes CSV outputs into out_dir (created if
// missing). Throws ConfigError on invalid input and NumericalError on a
// numerical abort; series written so far are flushed either way.
void run_scenario(const Scenario& sc, const std::string& out_dir,
                  const RunnerOptions& opts = {});

}  // namespace owc

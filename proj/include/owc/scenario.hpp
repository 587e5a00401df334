#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "owc/config.hpp"

namespace owc {

enum class RunMode { owc, classical_nsw, compare_step, accuracy_check };

const char* to_string(RunMode mode);

// A full experiment description as read from a flat key=value file.
struct Scenario {
  PhysicalConfig physical;
  double dx = 0.0;
  double cfl = 0.7;
  double t_end = 0.0;
  RunMode mode = RunMode::owc;
  std::vector<double> gauges;          // probe positions in [-l, l1]
  std::vector<double> snapshot_times;  // output times in [0, t_end]
};

// Parses and validates; errors carry "<name>:<line>:" diagnostics for the
// offending key where one exists.
Scenario parse_scenario(std::istream& in, const std::string& name);
Scenario load_scenario(const std::string& path);

// Writes every key explicitly at 17 significant digits; parsing the output
// reproduces the scenario exactly.
void write_scenario(const Scenario& sc, std::ostream& out);
void save_scenario(const Scenario& sc, const std::string& path);

}  // namespace owc

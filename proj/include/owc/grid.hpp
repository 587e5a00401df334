#pragma once

#include <vector>

#include "owc/config.hpp"

namespace owc {

// Four contiguous segments sharing interface nodes:
//   E0 = [-l, 0]          n1 cells, rest depth h_s
//   E1 = [0, l0-r]        n2 cells, rest depth h_0
//   I  = [l0-r, l0+r]     n3 cells, under the structure
//   E2 = [l0+r, l1]       n4 cells, rest depth h_0
// Global node i runs over n1+n2+n3+n4+1 coordinates; the interface nodes are
// placed exactly at 0, l0-r, l0+r and l1.
struct Grid {
  double dx = 0.0;
  int n1 = 0, n2 = 0, n3 = 0, n4 = 0;
  std::vector<double> x;
  int i_step = 0;        // x = 0
  int i_wall_left = 0;   // x = l0 - r
  int i_wall_right = 0;  // x = l0 + r
  int i_end = 0;         // x = l1

  int total_nodes() const { return n1 + n2 + n3 + n4 + 1; }
};

// Rejects any dx that does not divide every segment length to 1e-9 relative,
// so the interfaces land exactly on nodes.
Grid build_grid(const PhysicalConfig& cfg, double dx);

// dt = cfl * dx / sqrt(g h_s), fixed for the whole run; the stepper asserts
// the CFL condition against actual wave speeds every step.
struct TimeControls {
  double cfl = 0.0;
  double t_end = 0.0;
  double dt = 0.0;
};

TimeControls make_controls(const PhysicalConfig& cfg, double dx, double cfl,
                           double t_end);

}  // namespace owc

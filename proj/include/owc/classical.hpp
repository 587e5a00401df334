#pragma once

#include <vector>

#include "owc/config.hpp"
#include "owc/grid.hpp"
#include "owc/io.hpp"

namespace owc {

// Textbook single-domain reference for the no-step configuration: the whole
// wave region [-l, l0-r] is one flat segment of depth h_s and every interior
// node, x = 0 included, is advanced by plain Lax-Friedrichs. No transmission
// interface exists at x = 0; the chamber machinery (wall ODE, wall traces,
// reflecting end) is retained in the same form so a run is comparable with
// the split-domain solver over the full geometry. Implemented as its own
// monolithic loop on purpose: it shares no stepper or boundary code with the
// main solver, which is what makes the comparison meaningful.
struct ClassicalState {
  double t = 0.0;
  std::vector<double> zeta, q;    // wave region, nodes at -l .. l0-r
  std::vector<double> zeta2, q2;  // chamber segment, nodes at l0+r .. l1
  double q_i = 0.0;
};

// Rest start; requires h_s == h_0 (the reference has no step by definition).
ClassicalState classical_initial(const PhysicalConfig& cfg, const Grid& grid);

void classical_advance(ClassicalState& s, const PhysicalConfig& cfg,
                       const Grid& grid, const TimeControls& tc);

// Same row layout as the split-domain snapshot (one row per grid node,
// segment labels by position) so outputs are directly comparable.
std::vector<SnapshotRow> classical_snapshot_rows(const ClassicalState& s,
                                                 const PhysicalConfig& cfg,
                                                 const Grid& grid);

}  // namespace owc

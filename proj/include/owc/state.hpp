#pragma once

#include <vector>

#include "owc/config.hpp"
#include "owc/grid.hpp"

namespace owc {

// Node samples of one exterior segment, endpoints included. Endpoint values
// are the boundary traces owned by the boundary module; the stepper only
// rewrites the interior.
struct SegmentArrays {
  std::vector<double> zeta;
  std::vector<double> q;

  int nodes() const { return static_cast<int>(zeta.size()); }
};

// The evolving unknowns: elevation and discharge on the three exterior
// segments plus the interior scalar discharge q_i. Under the structure the
// surface is pinned to zeta_w, and the interior discharge is x-independent,
// so one scalar carries the whole interior segment. Traces at a shared
// interface are stored on both touching segments (equal at x = 0 and for q
// at the walls by the transmission conditions; the wall elevations differ).
struct State {
  double t = 0.0;
  SegmentArrays e0;  // [-l, 0], n1+1 nodes, rest depth h_s
  SegmentArrays e1;  // [0, l0-r], n2+1 nodes, rest depth h_0
  SegmentArrays e2;  // [l0+r, l1], n4+1 nodes, rest depth h_0
  double q_i = 0.0;
};

// Fluid at rest: all elevations and discharges zero at t = 0.
State initial_state(const PhysicalConfig& cfg, const Grid& grid);

}  // namespace owc

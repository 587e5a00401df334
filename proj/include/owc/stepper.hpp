#pragma once

#include <span>
#include <vector>

#include "owc/boundary.hpp"
#include "owc/config.hpp"
#include "owc/grid.hpp"
#include "owc/kernels.hpp"
#include "owc/physics.hpp"
#include "owc/state.hpp"

namespace owc {

// Lax-Friedrichs interface flux between two adjacent columns of one segment:
// (F(u_left) + F(u_right))/2 - (dx/2dt)(u_right - u_left) componentwise on
// (zeta, q). Both states must share the segment rest depth.
Flux2 lax_friedrichs_flux(const Cons& u_left, const Cons& u_right, double dx,
                          double dt, double g);

// Advances the interior columns of one segment. `states` holds only the
// nodes this call is allowed to rewrite; ghost_left/ghost_right carry the
// previous-step endpoint columns that feed the one-sided fluxes. Endpoint
// values for the new step are the boundary module's business. Throws on a
// dry column or a CFL violation, naming the offending node.
std::vector<Cons> step_segment(std::span<const Cons> states,
                               const Cons& ghost_left, const Cons& ghost_right,
                               double dx, double dt, double g);

// One full time step of the coupled problem: evaluates the four boundary
// updates (entry, step coupling, wall coupling with the interior ODE, end
// wall) from the previous state, then sweeps the three exterior segments.
// All boundary values are consumed at the previous time level, so the order
// of evaluation is immaterial and advance is a pure function of `prev`.
State advance(const State& prev, const PhysicalConfig& cfg, const Grid& grid,
              const TimeControls& tc, ExecPolicy policy = ExecPolicy::Serial);

}  // namespace owc

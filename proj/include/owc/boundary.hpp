#pragma once

#include <array>

#include "owc/config.hpp"
#include "owc/grid.hpp"
#include "owc/state.hpp"

namespace owc {

// Effective characteristic transport speed at a segment endpoint, obtained
// by linear interpolation between the endpoint speed and its neighbor's
// along the foot of the characteristic. beta = lambda dt/dx is the implied
// interpolation weight.
struct SpeedEstimate {
  double lambda = 0.0;
  double beta = 0.0;
};

// lambda = lambda_neighbor / (1 + (dt/dx)(lambda_neighbor - lambda_boundary)).
// Throws when the denominator is not positive, which signals a
// characteristic pointing the wrong way across the boundary.
SpeedEstimate interp_speed(double lambda_boundary, double lambda_neighbor,
                           double dt, double dx);

// One-sided upwind update of an invariant at a segment endpoint:
// (1 - beta) * boundary + beta * neighbor with beta = lambda dt/dx,
// evaluated as boundary + beta (neighbor - boundary) so a uniform field
// passes through bit-for-bit. Requires 0 <= beta <= 1.
double transport_update(double boundary_prev, double neighbor_prev,
                        double lambda, double dt, double dx);

// A single boundary node value produced for the next time level.
struct Trace {
  double zeta = 0.0;
  double q = 0.0;
};

// Discharge carried through the forced entry once the incoming elevation f
// and the outgoing invariant L are known:
// q = (depth + f) (2 (sqrt(g(depth+f)) - sqrt(g depth)) - L).
double entry_discharge(double f, double L, double depth, double g);

// Forced entry at x = -l: elevation follows the prescribed wave at the new
// time, discharge combines it with L transported out of the domain.
Trace entry_update(const State& prev, double t_next, const PhysicalConfig& cfg,
                   const Grid& grid, const TimeControls& tc);

// Residual of the two-equation step coupling for trial trace (x1, x2) =
// (zeta, q) shared by both sides of x = 0:
//   res1 = (h_s+x1)(R_l - 2(sqrt(g(h_s+x1)) - sqrt(g h_s))) - x2
//   res2 = (h_0+x1)(2(sqrt(g(h_0+x1)) - sqrt(g h_0)) - L_r) - x2
std::array<double, 2> step_residual(double x1, double x2, double R_l,
                                    double L_r, const PhysicalConfig& cfg);

struct StepSolveOptions {
  double tol = 1e-12;
  int max_iter = 50;
};

// Damped Newton from (0, 0) with the analytic Jacobian; the returned trace
// always satisfies |step_residual|_inf < 1e-10 or an exception is thrown
// with the residual history context.
Trace solve_step_coupling(double R_l, double L_r, const PhysicalConfig& cfg,
                          const StepSolveOptions& opts = {});

struct StepCouplerResult {
  Trace trace;    // shared (zeta, q) at x = 0
  double R_l = 0.0;  // invariant transported from the deep side
  double L_r = 0.0;  // invariant transported from the shallow side
};

// Full step transmission for one time step: transports R along E0 and L
// along E1 to x = 0, then solves the coupling system.
StepCouplerResult step_coupler_update(const State& prev,
                                      const PhysicalConfig& cfg,
                                      const Grid& grid,
                                      const TimeControls& tc);

// Previous-step data at the structure walls. q_wall is the shared discharge
// (equal to q_i and to both exterior wall discharges); the elevation traces
// are one-sided limits just outside the structure; alpha = 2r/h_w.
struct WallState {
  double q_wall = 0.0;
  double zeta_left = 0.0;
  double zeta_right = 0.0;
  double alpha = 0.0;
};

// Explicit update of the interior discharge ODE
//   -alpha dq_i/dt = [[ q^2/2h^2 + g zeta ]]
// with the jump taken as right-wall value minus left-wall value.
double wall_ode_update(const WallState& prev, const PhysicalConfig& cfg,
                       double dt);

struct WallTraces {
  double zeta_left = 0.0;
  double zeta_right = 0.0;
};

// New elevation traces at the two walls, each solving the scalar relation
// between the transported invariant, the elevation and the new wall
// discharge. Roots are found by safeguarded Newton seeded at the previous
// trace; among several candidates the one nearest the previous trace wins.
WallTraces wall_trace_update(const State& prev, double q_wall_new,
                             const PhysicalConfig& cfg, const Grid& grid,
                             const TimeControls& tc);

// Reflecting chamber end at x = l1: q = 0 and the elevation follows the
// arriving invariant, zeta = R(R/4 + sqrt(g h_0))/g.
Trace end_wall_update(const State& prev, const PhysicalConfig& cfg,
                      const Grid& grid, const TimeControls& tc);

}  // namespace owc

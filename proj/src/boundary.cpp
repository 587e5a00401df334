#include "owc/boundary.hpp"

#include <cmath>
#include <sstream>

#include "owc/errors.hpp"
#include "owc/physics.hpp"
#include "owc/solvers.hpp"

namespace owc {

SpeedEstimate interp_speed(double lambda_boundary, double lambda_neighbor,
                           double dt, double dx) {
  const double denom = 1.0 + (dt / dx) * (lambda_neighbor - lambda_boundary);
  if (!(denom > 0.0)) {
    std::ostringstream os;
    os << "characteristic direction failure: interpolation denominator "
       << denom << " (lambda_boundary=" << lambda_boundary
       << ", lambda_neighbor=" << lambda_neighbor << ")";
    throw NumericalError(os.str());
  }
  const double lambda = lambda_neighbor / denom;
  return {lambda, lambda * dt / dx};
}

double transport_update(double boundary_prev, double neighbor_prev,
                        double lambda, double dt, double dx) {
  const double beta = lambda * dt / dx;
  if (!(beta >= 0.0)) {
    throw NumericalError("negative transport speed at boundary: lambda = " +
                         std::to_string(lambda));
  }
  if (beta > 1.0) {
    std::ostringstream os;
    os << "CFL violation at boundary: lambda dt/dx = " << beta
       << " (lambda=" << lambda << ")";
    throw NumericalError(os.str());
  }
  return boundary_prev + beta * (neighbor_prev - boundary_prev);
}

double entry_discharge(double f, double L, double depth, double g) {
  const double h = depth + f;
  if (!(h > 0.0)) throw_dry(h, "entry_update");
  return h * (2.0 * (std::sqrt(g * h) - std::sqrt(g * depth)) - L);
}

Trace entry_update(const State& prev, double t_next, const PhysicalConfig& cfg,
                   const Grid& grid, const TimeControls& tc) {
  const Cons bd{prev.e0.zeta[0], prev.e0.q[0], cfg.h_s};
  const Cons nb{prev.e0.zeta[1], prev.e0.q[1], cfg.h_s};
  const SpeedEstimate sp = interp_speed(wave_speeds(bd, cfg.g).minus,
                                        wave_speeds(nb, cfg.g).minus, tc.dt,
                                        grid.dx);
  const double L = transport_update(to_riemann(bd, cfg.g).L,
                                    to_riemann(nb, cfg.g).L, sp.lambda, tc.dt,
                                    grid.dx);
  const double f = forcing(t_next, cfg);
  return {f, entry_discharge(f, L, cfg.h_s, cfg.g)};
}

std::array<double, 2> step_residual(double x1, double x2, double R_l,
                                    double L_r, const PhysicalConfig& cfg) {
  const double g = cfg.g;
  const double h1 = cfg.h_s + x1;
  const double h2 = cfg.h_0 + x1;
  if (!(h1 > 0.0)) throw_dry(h1, "step_residual (deep side)");
  if (!(h2 > 0.0)) throw_dry(h2, "step_residual (shallow side)");
  const double res1 =
      h1 * (R_l - 2.0 * (std::sqrt(g * h1) - std::sqrt(g * cfg.h_s))) - x2;
  const double res2 =
      h2 * (2.0 * (std::sqrt(g * h2) - std::sqrt(g * cfg.h_0)) - L_r) - x2;
  return {res1, res2};
}

Trace solve_step_coupling(double R_l, double L_r, const PhysicalConfig& cfg,
                          const StepSolveOptions& opts) {
  if (!(std::isfinite(R_l) && std::isfinite(L_r))) {
    throw NumericalError("non-finite invariants entering the step coupling");
  }
  auto fn = [&](const std::array<double, 2>& x) {
    return step_residual(x[0], x[1], R_l, L_r, cfg);
  };
  // x2 enters linearly; x1 only through the smooth depth terms.
  auto jac = [&](const std::array<double, 2>& x) {
    const double g = cfg.g;
    const double c1 = std::sqrt(g * (cfg.h_s + x[0]));
    const double c2 = std::sqrt(g * (cfg.h_0 + x[0]));
    const double cs = std::sqrt(g * cfg.h_s);
    const double c0 = std::sqrt(g * cfg.h_0);
    return std::array<std::array<double, 2>, 2>{
        {{R_l + 2.0 * cs - 3.0 * c1, -1.0},
         {3.0 * c2 - 2.0 * c0 - L_r, -1.0}}};
  };
  Newton2x2Options nopts;
  nopts.tol = opts.tol;
  nopts.max_iter = opts.max_iter;
  const Newton2x2Result res = newton_2x2(fn, jac, {0.0, 0.0}, nopts);
  const double rnorm =
      std::max(std::abs(res.residual[0]), std::abs(res.residual[1]));
  if (!(rnorm < 1e-10)) {
    std::ostringstream os;
    os << "step coupling solver failed: residual (" << res.residual[0] << ", "
       << res.residual[1] << ") after " << res.iterations
       << " iterations for R_l=" << R_l << ", L_r=" << L_r;
    throw NumericalError(os.str());
  }
  return {res.x[0], res.x[1]};
}

StepCouplerResult step_coupler_update(const State& prev,
                                      const PhysicalConfig& cfg,
                                      const Grid& grid,
                                      const TimeControls& tc) {
  const double g = cfg.g;
  const int n1 = grid.n1;
  const Cons lbd{prev.e0.zeta[n1], prev.e0.q[n1], cfg.h_s};
  const Cons lnb{prev.e0.zeta[n1 - 1], prev.e0.q[n1 - 1], cfg.h_s};
  const SpeedEstimate spR = interp_speed(
      wave_speeds(lbd, g).plus, wave_speeds(lnb, g).plus, tc.dt, grid.dx);
  const double R_l = transport_update(to_riemann(lbd, g).R, to_riemann(lnb, g).R,
                                      spR.lambda, tc.dt, grid.dx);

  const Cons rbd{prev.e1.zeta[0], prev.e1.q[0], cfg.h_0};
  const Cons rnb{prev.e1.zeta[1], prev.e1.q[1], cfg.h_0};
  const SpeedEstimate spL = interp_speed(
      wave_speeds(rbd, g).minus, wave_speeds(rnb, g).minus, tc.dt, grid.dx);
  const double L_r = transport_update(to_riemann(rbd, g).L, to_riemann(rnb, g).L,
                                      spL.lambda, tc.dt, grid.dx);

  StepCouplerResult out;
  out.R_l = R_l;
  out.L_r = L_r;
  out.trace = solve_step_coupling(R_l, L_r, cfg);
  return out;
}

double wall_ode_update(const WallState& prev, const PhysicalConfig& cfg,
                       double dt) {
  if (!(prev.alpha > 0.0)) {
    throw NumericalError("wall inertia alpha must be positive, got " +
                         std::to_string(prev.alpha));
  }
  const double hL = cfg.h_0 + prev.zeta_left;
  const double hR = cfg.h_0 + prev.zeta_right;
  if (!(hL > 0.0)) throw_dry(hL, "wall_ode_update (left trace)");
  if (!(hR > 0.0)) throw_dry(hR, "wall_ode_update (right trace)");
  const double q2 = prev.q_wall * prev.q_wall;
  const double head_right = q2 / (2.0 * hR * hR) + cfg.g * prev.zeta_right;
  const double head_left = q2 / (2.0 * hL * hL) + cfg.g * prev.zeta_left;
  return prev.q_wall - (dt / prev.alpha) * (head_right - head_left);
}

namespace {

// Scalar wall relation solved for the elevation trace; sign = +1 selects the
// left-wall form with transported R, sign = -1 the right-wall form with
// transported L.
struct WallEquation {
  double g, h_0, c0, invariant, q_wall, sign;

  double value(double zeta) const {
    const double h = h_0 + zeta;
    const double c = std::sqrt(g * h);
    return h * (sign * invariant - 2.0 * sign * (c - c0)) - q_wall;
  }
  double derivative(double zeta) const {
    const double c = std::sqrt(g * (h_0 + zeta));
    return sign * (invariant + 2.0 * c0 - 3.0 * c);
  }
};

double solve_wall_trace(const WallEquation& eq, double seed, double lo,
                        double hi, const char* which) {
  auto fn = [&](double z) { return eq.value(z); };
  auto dfn = [&](double z) { return eq.derivative(z); };
  const ScalarRootResult res = newton_bisect(fn, dfn, seed, lo, hi);
  if (!res.converged || !(std::abs(res.residual) < 1e-10)) {
    std::ostringstream os;
    os << "wall trace solve failed at the " << which << " wall: invariant="
       << eq.invariant << ", q_wall=" << eq.q_wall << ", seed=" << seed
       << ", bracket [" << lo << ", " << hi << "], residual=" << res.residual;
    throw NumericalError(os.str());
  }
  return res.x;
}

}  // namespace

WallTraces wall_trace_update(const State& prev, double q_wall_new,
                             const PhysicalConfig& cfg, const Grid& grid,
                             const TimeControls& tc) {
  const double g = cfg.g;
  const double h0 = cfg.h_0;
  const double c0 = std::sqrt(g * h0);
  const int n2 = grid.n2;

  const Cons bdl{prev.e1.zeta[n2], prev.e1.q[n2], h0};
  const Cons nbl{prev.e1.zeta[n2 - 1], prev.e1.q[n2 - 1], h0};
  const SpeedEstimate spR = interp_speed(
      wave_speeds(bdl, g).plus, wave_speeds(nbl, g).plus, tc.dt, grid.dx);
  const double R = transport_update(to_riemann(bdl, g).R, to_riemann(nbl, g).R,
                                    spR.lambda, tc.dt, grid.dx);

  const Cons bdr{prev.e2.zeta[0], prev.e2.q[0], h0};
  const Cons nbr{prev.e2.zeta[1], prev.e2.q[1], h0};
  const SpeedEstimate spL = interp_speed(
      wave_speeds(bdr, g).minus, wave_speeds(nbr, g).minus, tc.dt, grid.dx);
  const double L = transport_update(to_riemann(bdr, g).L, to_riemann(nbr, g).L,
                                    spL.lambda, tc.dt, grid.dx);

  const double lo = -0.9 * h0;
  const double hi = 5.0 * h0;
  WallTraces out;
  out.zeta_left = solve_wall_trace({g, h0, c0, R, q_wall_new, +1.0},
                                   prev.e1.zeta[n2], lo, hi, "left");
  out.zeta_right = solve_wall_trace({g, h0, c0, L, q_wall_new, -1.0},
                                    prev.e2.zeta[0], lo, hi, "right");
  return out;
}

Trace end_wall_update(const State& prev, const PhysicalConfig& cfg,
                      const Grid& grid, const TimeControls& tc) {
  const double g = cfg.g;
  const int n4 = grid.n4;
  const Cons bd{prev.e2.zeta[n4], prev.e2.q[n4], cfg.h_0};
  const Cons nb{prev.e2.zeta[n4 - 1], prev.e2.q[n4 - 1], cfg.h_0};
  const SpeedEstimate sp = interp_speed(wave_speeds(bd, g).plus,
                                        wave_speeds(nb, g).plus, tc.dt, grid.dx);
  const double R = transport_update(to_riemann(bd, g).R, to_riemann(nb, g).R,
                                    sp.lambda, tc.dt, grid.dx);
  // zeta = (R/2 + c0)^2/g - h_0, factored as R(R/4 + c0)/g so the rest state
  // reflects to exactly zero.
  const double c0 = std::sqrt(g * cfg.h_0);
  return {R * (0.25 * R + c0) / g, 0.0};
}

}  // namespace owc

#include "owc/stepper.hpp"

#include <cmath>
#include <sstream>

#include "owc/errors.hpp"

namespace owc {

Flux2 lax_friedrichs_flux(const Cons& u_left, const Cons& u_right, double dx,
                          double dt, double g) {
  if (u_left.depth_rest != u_right.depth_rest) {
    throw NumericalError("lax_friedrichs_flux requires both states on the same segment rest depth");
  }
  const Flux2 fl = flux(u_left, g);
  const Flux2 fr = flux(u_right, g);
  const double coef = dx / (2.0 * dt);
  return {0.5 * (fl.mass + fr.mass) - coef * (u_right.zeta - u_left.zeta),
          0.5 * (fl.momentum + fr.momentum) - coef * (u_right.q - u_left.q)};
}

namespace {

[[noreturn]] void report_sweep_failure(const SweepReport& rep, double dt,
                                       double dx, const double* zeta_in,
                                       const double* q_in, int n_nodes,
                                       double depth_rest, double g,
                                       const char* segment) {
  std::ostringstream os;
  if (rep.dry_input_node >= 0) {
    os << "dry state in segment " << segment << " at node "
       << rep.dry_input_node << " (h = "
       << depth_rest + zeta_in[rep.dry_input_node] << ")";
    throw NumericalError(os.str());
  }
  if (rep.bad_output_node >= 0) {
    os << "update produced a dry or non-finite column in segment " << segment
       << " at node " << rep.bad_output_node;
    throw NumericalError(os.str());
  }
  // CFL violation: rescan for the offending node only on this cold path.
  int worst = 0;
  double worst_speed = 0.0;
  for (int i = 0; i < n_nodes; ++i) {
    const double h = depth_rest + zeta_in[i];
    const double sp = std::sqrt(g * h) + std::abs(q_in[i]) / h;
    if (sp > worst_speed) {
      worst_speed = sp;
      worst = i;
    }
  }
  os << "CFL violation in segment " << segment << ": speed " << worst_speed
     << " at node " << worst << " gives lambda dt/dx = "
     << worst_speed * dt / dx;
  throw NumericalError(os.str());
}

// Sweeps one segment held in SoA form and throws on any flagged failure.
void sweep_checked(const double* zeta_in, const double* q_in, double* zeta_out,
                   double* q_out, int n_nodes, double depth_rest, double dx,
                   double dt, double g, ExecPolicy policy,
                   const char* segment) {
  const SweepReport rep = lxf_sweep(zeta_in, q_in, zeta_out, q_out, n_nodes,
                                    depth_rest, dx, dt, g, policy);
  if (rep.dry_input_node >= 0 || rep.bad_output_node >= 0 ||
      rep.max_speed * dt / dx > 1.0) {
    report_sweep_failure(rep, dt, dx, zeta_in, q_in, n_nodes, depth_rest, g,
                         segment);
  }
}

void check_trace(const Trace& tr, double depth_rest, const char* where) {
  if (!std::isfinite(tr.zeta) || !std::isfinite(tr.q) ||
      !(depth_rest + tr.zeta > 0.0)) {
    std::ostringstream os;
    os << "invalid boundary value at " << where << ": zeta=" << tr.zeta
       << ", q=" << tr.q;
    throw NumericalError(os.str());
  }
}

}  // namespace

std::vector<Cons> step_segment(std::span<const Cons> states,
                               const Cons& ghost_left, const Cons& ghost_right,
                               double dx, double dt, double g) {
  const int n = static_cast<int>(states.size());
  const double depth = n > 0 ? states[0].depth_rest : ghost_left.depth_rest;
  if (ghost_left.depth_rest != depth || ghost_right.depth_rest != depth) {
    throw NumericalError("step_segment requires one rest depth across states and ghosts");
  }
  std::vector<double> zeta_in(n + 2), q_in(n + 2);
  zeta_in[0] = ghost_left.zeta;
  q_in[0] = ghost_left.q;
  for (int i = 0; i < n; ++i) {
    if (states[i].depth_rest != depth) {
      throw NumericalError("step_segment requires one rest depth across states and ghosts");
    }
    zeta_in[i + 1] = states[i].zeta;
    q_in[i + 1] = states[i].q;
  }
  zeta_in[n + 1] = ghost_right.zeta;
  q_in[n + 1] = ghost_right.q;

  std::vector<double> zeta_out = zeta_in;
  std::vector<double> q_out = q_in;
  sweep_checked(zeta_in.data(), q_in.data(), zeta_out.data(), q_out.data(),
                n + 2, depth, dx, dt, g, ExecPolicy::Serial, "(segment)");

  std::vector<Cons> out(n);
  for (int i = 0; i < n; ++i) out[i] = {zeta_out[i + 1], q_out[i + 1], depth};
  return out;
}

State advance(const State& prev, const PhysicalConfig& cfg, const Grid& grid,
              const TimeControls& tc, ExecPolicy policy) {
  const double dt = tc.dt;
  const double dx = grid.dx;
  const double t_next = prev.t + dt;

  auto with_time = [&](const char* stage, auto&& fn) {
    try {
      return fn();
    } catch (const NumericalError& e) {
      std::ostringstream os;
      os << e.what() << " [" << stage << " at t=" << prev.t << "]";
      throw NumericalError(os.str());
    }
  };

  // Boundary values for the new time level, all read from time-m data.
  const Trace entry = with_time("entry", [&] {
    return entry_update(prev, t_next, cfg, grid, tc);
  });
  const StepCouplerResult sc = with_time("step coupler", [&] {
    return step_coupler_update(prev, cfg, grid, tc);
  });
  const double q_i_new = with_time("wall ODE", [&] {
    const WallState ws{prev.q_i, prev.e1.zeta.back(), prev.e2.zeta.front(),
                       cfg.wall_alpha()};
    return wall_ode_update(ws, cfg, dt);
  });
  const WallTraces wt = with_time("wall traces", [&] {
    return wall_trace_update(prev, q_i_new, cfg, grid, tc);
  });
  const Trace endw = with_time("end wall", [&] {
    return end_wall_update(prev, cfg, grid, tc);
  });

  check_trace(entry, cfg.h_s, "entry");
  check_trace(sc.trace, cfg.h_s, "step (deep side)");
  check_trace(sc.trace, cfg.h_0, "step (shallow side)");
  check_trace({wt.zeta_left, q_i_new}, cfg.h_0, "left wall");
  check_trace({wt.zeta_right, q_i_new}, cfg.h_0, "right wall");
  check_trace(endw, cfg.h_0, "end wall");

  State next;
  next.t = t_next;
  next.q_i = q_i_new;
  next.e0.zeta.resize(prev.e0.zeta.size());
  next.e0.q.resize(prev.e0.q.size());
  next.e1.zeta.resize(prev.e1.zeta.size());
  next.e1.q.resize(prev.e1.q.size());
  next.e2.zeta.resize(prev.e2.zeta.size());
  next.e2.q.resize(prev.e2.q.size());

  auto sweep_segment = [&](const SegmentArrays& in, SegmentArrays& out,
                           double depth, const char* name) {
    with_time(name, [&] {
      sweep_checked(in.zeta.data(), in.q.data(), out.zeta.data(), out.q.data(),
                    in.nodes(), depth, dx, dt, cfg.g, policy, name);
      return 0;
    });
  };
  sweep_segment(prev.e0, next.e0, cfg.h_s, "E0");
  sweep_segment(prev.e1, next.e1, cfg.h_0, "E1");
  sweep_segment(prev.e2, next.e2, cfg.h_0, "E2");

  next.e0.zeta.front() = entry.zeta;
  next.e0.q.front() = entry.q;
  next.e0.zeta.back() = sc.trace.zeta;
  next.e0.q.back() = sc.trace.q;
  next.e1.zeta.front() = sc.trace.zeta;
  next.e1.q.front() = sc.trace.q;
  next.e1.zeta.back() = wt.zeta_left;
  next.e1.q.back() = q_i_new;
  next.e2.zeta.front() = wt.zeta_right;
  next.e2.q.front() = q_i_new;
  next.e2.zeta.back() = endw.zeta;
  next.e2.q.back() = endw.q;
  return next;
}

}  // namespace owc

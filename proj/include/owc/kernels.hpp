#pragma once

#include <cmath>

#include "owc/physics.hpp"

namespace owc {

enum class ExecPolicy { Serial, Parallel };

// Result of one Lax-Friedrichs node update plus the checks fused into the
// sweep: the local CFL speed of the input node, a dry flag on the input
// column and a dry/non-finite flag on the produced value.
struct NodeUpdate {
  double zeta = 0.0;
  double q = 0.0;
  double speed = 0.0;
  bool dry_in = false;
  bool bad_out = false;
};

// Conservative update of interior node i from the three incoming columns,
//   U_i - (dt/dx) (F_{i+1/2} - F_{i-1/2}),
// with the Lax-Friedrichs interface flux
//   F_{i+1/2} = (F_i + F_{i+1})/2 - (dx/2dt)(U_{i+1} - U_i).
// Serial and parallel sweeps and step_segment all funnel through this one
// function, so execution policy can never change results bitwise. At rest
// every flux is exactly zero and the node is returned unchanged.
inline NodeUpdate lxf_node(const double* zeta_in, const double* q_in, int i,
                           double depth_rest, double dx, double dt, double g) {
  const Cons um{zeta_in[i - 1], q_in[i - 1], depth_rest};
  const Cons u0{zeta_in[i], q_in[i], depth_rest};
  const Cons up{zeta_in[i + 1], q_in[i + 1], depth_rest};
  const double h0 = depth_rest + u0.zeta;

  NodeUpdate r;
  r.dry_in = !(h0 > 0.0);

  const Flux2 fm = flux_unchecked(um, g);
  const Flux2 f0 = flux_unchecked(u0, g);
  const Flux2 fp = flux_unchecked(up, g);
  const double coef = dx / (2.0 * dt);
  const double right_mass = 0.5 * (f0.mass + fp.mass) - coef * (up.zeta - u0.zeta);
  const double left_mass = 0.5 * (fm.mass + f0.mass) - coef * (u0.zeta - um.zeta);
  const double right_mom =
      0.5 * (f0.momentum + fp.momentum) - coef * (up.q - u0.q);
  const double left_mom =
      0.5 * (fm.momentum + f0.momentum) - coef * (u0.q - um.q);
  const double dtdx = dt / dx;
  r.zeta = u0.zeta - dtdx * (right_mass - left_mass);
  r.q = u0.q - dtdx * (right_mom - left_mom);
  r.speed = std::sqrt(g * h0) + std::abs(u0.q) / h0;

  const double h_new = depth_rest + r.zeta;
  r.bad_out = !(h_new > 0.0) || !std::isfinite(r.zeta) || !std::isfinite(r.q);
  return r;
}

// Outcome of a whole-segment sweep. Node indices are local to the swept
// arrays; -1 means no offender. max_speed covers every node of the segment,
// endpoints included, so the caller can assert the CFL condition.
struct SweepReport {
  double max_speed = 0.0;
  int dry_input_node = -1;
  int bad_output_node = -1;
};

// Updates interior nodes 1 .. n_nodes-2 of one segment; endpoint slots of
// the output arrays are left untouched (they belong to the boundary
// module). Serial and parallel policies produce bitwise identical output
// and report.
SweepReport lxf_sweep(const double* zeta_in, const double* q_in,
                      double* zeta_out, double* q_out, int n_nodes,
                      double depth_rest, double dx, double dt, double g,
                      ExecPolicy policy);

}  // namespace owc

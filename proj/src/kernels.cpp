#include "owc/kernels.hpp"

#include <algorithm>
#include <climits>

namespace owc {

namespace {

// Endpoint columns feed one-sided fluxes and the CFL assertion but are not
// rewritten by the sweep.
void fold_endpoint(const double* zeta_in, const double* q_in, int i,
                   double depth_rest, double g, double& max_speed, int& bad_in) {
  const double h = depth_rest + zeta_in[i];
  if (!(h > 0.0)) {
    bad_in = std::min(bad_in, i);
    return;
  }
  const double sp = std::sqrt(g * h) + std::abs(q_in[i]) / h;
  max_speed = std::max(max_speed, sp);
}

}  // namespace

SweepReport lxf_sweep(const double* zeta_in, const double* q_in,
                      double* zeta_out, double* q_out, int n_nodes,
                      double depth_rest, double dx, double dt, double g,
                      ExecPolicy policy) {
  double max_speed = 0.0;
  int bad_in = INT_MAX;
  int bad_out = INT_MAX;
  const int last = n_nodes - 1;

#ifdef OWC_HAVE_OPENMP
  if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(static) reduction(max : max_speed) \
    reduction(min : bad_in) reduction(min : bad_out)
    for (int i = 1; i < last; ++i) {
      const NodeUpdate u = lxf_node(zeta_in, q_in, i, depth_rest, dx, dt, g);
      zeta_out[i] = u.zeta;
      q_out[i] = u.q;
      if (u.speed > max_speed) max_speed = u.speed;
      if (u.dry_in && i < bad_in) bad_in = i;
      if (u.bad_out && i < bad_out) bad_out = i;
    }
  } else
#else
  (void)policy;
#endif
  {
    for (int i = 1; i < last; ++i) {
      const NodeUpdate u = lxf_node(zeta_in, q_in, i, depth_rest, dx, dt, g);
      zeta_out[i] = u.zeta;
      q_out[i] = u.q;
      if (u.speed > max_speed) max_speed = u.speed;
      if (u.dry_in && i < bad_in) bad_in = i;
      if (u.bad_out && i < bad_out) bad_out = i;
    }
  }

  if (n_nodes > 0) {
    fold_endpoint(zeta_in, q_in, 0, depth_rest, g, max_speed, bad_in);
    if (last > 0) fold_endpoint(zeta_in, q_in, last, depth_rest, g, max_speed, bad_in);
  }

  SweepReport rep;
  rep.max_speed = max_speed;
  rep.dry_input_node = bad_in == INT_MAX ? -1 : bad_in;
  rep.bad_output_node = bad_out == INT_MAX ? -1 : bad_out;
  return rep;
}

}  // namespace owc

#include "owc/classical.hpp"

#include <cmath>
#include <sstream>

#include "owc/errors.hpp"
#include "owc/solvers.hpp"

namespace owc {

namespace {

void check_flat(const PhysicalConfig& cfg) {
  if (cfg.h_s != cfg.h_0) {
    throw ConfigError("the classical reference runs a flat depth and requires h_s == h_0");
  }
}

// All update formulas are written out locally: this loop deliberately shares
// nothing with the stepper or boundary modules.
struct Local {
  double g, d, c_rest, dt, dx;

  double depth(double zeta) const { return d + zeta; }
  double celerity(double zeta) const { return std::sqrt(g * depth(zeta)); }
  double riemann_R(double zeta, double q) const {
    return 2.0 * (celerity(zeta) - c_rest) + q / depth(zeta);
  }
  double riemann_L(double zeta, double q) const {
    return 2.0 * (celerity(zeta) - c_rest) - q / depth(zeta);
  }
  double lambda_plus(double zeta, double q) const {
    return q / depth(zeta) + celerity(zeta);
  }
  double lambda_minus(double zeta, double q) const {
    return celerity(zeta) - q / depth(zeta);
  }
  // One-sided transport with the interpolated characteristic speed.
  double carry(double bd, double nb, double lam_bd, double lam_nb) const {
    const double denom = 1.0 + (dt / dx) * (lam_nb - lam_bd);
    if (!(denom > 0.0)) {
      throw NumericalError("classical reference: characteristic direction failure");
    }
    const double beta = (lam_nb / denom) * dt / dx;
    if (!(beta >= 0.0 && beta <= 1.0)) {
      throw NumericalError("classical reference: CFL violation at a boundary");
    }
    return bd + beta * (nb - bd);
  }
  double momentum_flux(double zeta, double q) const {
    const double h = depth(zeta);
    return 0.5 * g * (h - d) * (h + d) + q * q / h;
  }
};

void lxf_interior(const Local& lo, const std::vector<double>& zin,
                  const std::vector<double>& qin, std::vector<double>& zout,
                  std::vector<double>& qout, const char* label) {
  const int n = static_cast<int>(zin.size());
  const double coef = lo.dx / (2.0 * lo.dt);
  const double dtdx = lo.dt / lo.dx;
  double max_speed = 0.0;
  for (int i = 0; i < n; ++i) {
    const double h = lo.depth(zin[i]);
    if (!(h > 0.0)) {
      std::ostringstream os;
      os << "classical reference: dry state in " << label << " at node " << i;
      throw NumericalError(os.str());
    }
    const double sp = std::sqrt(lo.g * h) + std::abs(qin[i]) / h;
    if (sp > max_speed) max_speed = sp;
  }
  if (max_speed * lo.dt / lo.dx > 1.0) {
    std::ostringstream os;
    os << "classical reference: CFL violation in " << label << " (speed "
       << max_speed << ")";
    throw NumericalError(os.str());
  }
  for (int i = 1; i < n - 1; ++i) {
    const double fzl = 0.5 * (qin[i - 1] + qin[i]) - coef * (zin[i] - zin[i - 1]);
    const double fzr = 0.5 * (qin[i] + qin[i + 1]) - coef * (zin[i + 1] - zin[i]);
    const double fql = 0.5 * (lo.momentum_flux(zin[i - 1], qin[i - 1]) +
                              lo.momentum_flux(zin[i], qin[i])) -
                       coef * (qin[i] - qin[i - 1]);
    const double fqr = 0.5 * (lo.momentum_flux(zin[i], qin[i]) +
                              lo.momentum_flux(zin[i + 1], qin[i + 1])) -
                       coef * (qin[i + 1] - qin[i]);
    zout[i] = zin[i] - dtdx * (fzr - fzl);
    qout[i] = qin[i] - dtdx * (fqr - fql);
  }
}

double wall_root(const Local& lo, double invariant, double sign, double q_wall,
                 double seed, const char* which) {
  auto fn = [&](double z) {
    const double h = lo.depth(z);
    return h * (sign * invariant - 2.0 * sign * (lo.celerity(z) - lo.c_rest)) -
           q_wall;
  };
  auto dfn = [&](double z) {
    return sign * (invariant + 2.0 * lo.c_rest - 3.0 * lo.celerity(z));
  };
  const ScalarRootResult res =
      newton_bisect(fn, dfn, seed, -0.9 * lo.d, 5.0 * lo.d);
  if (!res.converged || !(std::abs(res.residual) < 1e-10)) {
    std::ostringstream os;
    os << "classical reference: wall trace solve failed at the " << which
       << " wall (invariant=" << invariant << ", q_wall=" << q_wall << ")";
    throw NumericalError(os.str());
  }
  return res.x;
}

}  // namespace

ClassicalState classical_initial(const PhysicalConfig& cfg, const Grid& grid) {
  validate(cfg);
  check_flat(cfg);
  ClassicalState s;
  s.t = 0.0;
  s.zeta.assign(grid.n1 + grid.n2 + 1, 0.0);
  s.q.assign(grid.n1 + grid.n2 + 1, 0.0);
  s.zeta2.assign(grid.n4 + 1, 0.0);
  s.q2.assign(grid.n4 + 1, 0.0);
  s.q_i = 0.0;
  return s;
}

void classical_advance(ClassicalState& s, const PhysicalConfig& cfg,
                       const Grid& grid, const TimeControls& tc) {
  check_flat(cfg);
  const Local lo{cfg.g, cfg.h_s, std::sqrt(cfg.g * cfg.h_s), tc.dt, grid.dx};
  const int nw = static_cast<int>(s.zeta.size()) - 1;
  const int nc = static_cast<int>(s.zeta2.size()) - 1;
  const double t_next = s.t + tc.dt;

  // Forced entry.
  const double f = forcing(t_next, cfg);
  const double L_entry =
      lo.carry(lo.riemann_L(s.zeta[0], s.q[0]), lo.riemann_L(s.zeta[1], s.q[1]),
               lo.lambda_minus(s.zeta[0], s.q[0]),
               lo.lambda_minus(s.zeta[1], s.q[1]));
  const double h_entry = lo.depth(f);
  if (!(h_entry > 0.0)) {
    throw NumericalError("classical reference: dry entry");
  }
  const double q_entry =
      h_entry * (2.0 * (std::sqrt(lo.g * h_entry) - lo.c_rest) - L_entry);

  // Structure walls: interior discharge ODE then the two elevation traces.
  const double zl = s.zeta[nw];
  const double zr = s.zeta2[0];
  const double hl = lo.depth(zl);
  const double hr = lo.depth(zr);
  if (!(hl > 0.0 && hr > 0.0)) {
    throw NumericalError("classical reference: dry wall trace");
  }
  const double q2w = s.q_i * s.q_i;
  const double jump = (q2w / (2.0 * hr * hr) + lo.g * zr) -
                      (q2w / (2.0 * hl * hl) + lo.g * zl);
  const double q_i_new = s.q_i - (tc.dt / cfg.wall_alpha()) * jump;

  const double R_wall =
      lo.carry(lo.riemann_R(s.zeta[nw], s.q[nw]),
               lo.riemann_R(s.zeta[nw - 1], s.q[nw - 1]),
               lo.lambda_plus(s.zeta[nw], s.q[nw]),
               lo.lambda_plus(s.zeta[nw - 1], s.q[nw - 1]));
  const double L_wall =
      lo.carry(lo.riemann_L(s.zeta2[0], s.q2[0]),
               lo.riemann_L(s.zeta2[1], s.q2[1]),
               lo.lambda_minus(s.zeta2[0], s.q2[0]),
               lo.lambda_minus(s.zeta2[1], s.q2[1]));
  const double zeta_left = wall_root(lo, R_wall, +1.0, q_i_new, zl, "left");
  const double zeta_right = wall_root(lo, L_wall, -1.0, q_i_new, zr, "right");

  // Reflecting chamber end.
  const double R_end =
      lo.carry(lo.riemann_R(s.zeta2[nc], s.q2[nc]),
               lo.riemann_R(s.zeta2[nc - 1], s.q2[nc - 1]),
               lo.lambda_plus(s.zeta2[nc], s.q2[nc]),
               lo.lambda_plus(s.zeta2[nc - 1], s.q2[nc - 1]));
  const double zeta_end = R_end * (0.25 * R_end + lo.c_rest) / lo.g;

  // Interior sweeps; node n1 (x = 0) is an ordinary interior node here.
  std::vector<double> znew = s.zeta, qnew = s.q;
  std::vector<double> znew2 = s.zeta2, qnew2 = s.q2;
  lxf_interior(lo, s.zeta, s.q, znew, qnew, "the wave region");
  lxf_interior(lo, s.zeta2, s.q2, znew2, qnew2, "the chamber segment");

  znew[0] = f;
  qnew[0] = q_entry;
  znew[nw] = zeta_left;
  qnew[nw] = q_i_new;
  znew2[0] = zeta_right;
  qnew2[0] = q_i_new;
  znew2[nc] = zeta_end;
  qnew2[nc] = 0.0;

  s.zeta.swap(znew);
  s.q.swap(qnew);
  s.zeta2.swap(znew2);
  s.q2.swap(qnew2);
  s.q_i = q_i_new;
  s.t = t_next;
}

std::vector<SnapshotRow> classical_snapshot_rows(const ClassicalState& s,
                                                 const PhysicalConfig& cfg,
                                                 const Grid& grid) {
  std::vector<SnapshotRow> rows;
  rows.reserve(grid.total_nodes());
  for (int i = 0; i <= grid.n1; ++i) {
    rows.push_back({grid.x[i], s.zeta[i], s.q[i], "E0"});
  }
  for (int j = 1; j <= grid.n2; ++j) {
    rows.push_back({grid.x[grid.n1 + j], s.zeta[grid.n1 + j], s.q[grid.n1 + j], "E1"});
  }
  for (int k = 1; k < grid.n3; ++k) {
    rows.push_back({grid.x[grid.i_wall_left + k], cfg.zeta_w, s.q_i, "I"});
  }
  for (int j = 0; j <= grid.n4; ++j) {
    rows.push_back({grid.x[grid.i_wall_right + j], s.zeta2[j], s.q2[j], "E2"});
  }
  return rows;
}

}  // namespace owc

#include "owc/grid.hpp"

#include <cmath>
#include <sstream>

#include "owc/errors.hpp"

namespace owc {

namespace {

int segment_cells(double length, double dx, const char* name) {
  const long long n = std::llround(length / dx);
  std::ostringstream os;
  if (n < 1) {
    os << "dx=" << dx << " exceeds segment " << name << " of length " << length;
    throw ConfigError(os.str());
  }
  if (std::abs(static_cast<double>(n) * dx - length) > 1e-9 * length) {
    os << "segment " << name << " of length " << length
       << " is not an integer multiple of dx=" << dx;
    throw ConfigError(os.str());
  }
  return static_cast<int>(n);
}

}  // namespace

Grid build_grid(const PhysicalConfig& cfg, double dx) {
  validate(cfg);
  if (!(dx > 0.0)) throw ConfigError("dx must be positive");

  Grid grid;
  grid.dx = dx;
  grid.n1 = segment_cells(cfg.l, dx, "[-l, 0]");
  grid.n2 = segment_cells(cfg.l0 - cfg.r, dx, "[0, l0-r]");
  grid.n3 = segment_cells(2.0 * cfg.r, dx, "[l0-r, l0+r]");
  grid.n4 = segment_cells(cfg.l1 - (cfg.l0 + cfg.r), dx, "[l0+r, l1]");

  grid.i_step = grid.n1;
  grid.i_wall_left = grid.n1 + grid.n2;
  grid.i_wall_right = grid.n1 + grid.n2 + grid.n3;
  grid.i_end = grid.n1 + grid.n2 + grid.n3 + grid.n4;

  grid.x.resize(grid.total_nodes());
  // Nodes are laid out from each segment's left endpoint; the interface
  // coordinates are pinned exactly so downstream index checks can compare
  // against 0, l0-r, l0+r and l1 without tolerance.
  for (int i = 0; i < grid.i_step; ++i) grid.x[i] = -cfg.l + i * dx;
  grid.x[grid.i_step] = 0.0;
  for (int i = grid.i_step + 1; i < grid.i_wall_left; ++i)
    grid.x[i] = (i - grid.i_step) * dx;
  grid.x[grid.i_wall_left] = cfg.l0 - cfg.r;
  for (int i = grid.i_wall_left + 1; i < grid.i_wall_right; ++i)
    grid.x[i] = (cfg.l0 - cfg.r) + (i - grid.i_wall_left) * dx;
  grid.x[grid.i_wall_right] = cfg.l0 + cfg.r;
  for (int i = grid.i_wall_right + 1; i < grid.i_end; ++i)
    grid.x[i] = (cfg.l0 + cfg.r) + (i - grid.i_wall_right) * dx;
  grid.x[grid.i_end] = cfg.l1;
  return grid;
}

TimeControls make_controls(const PhysicalConfig& cfg, double dx, double cfl,
                           double t_end) {
  if (!(cfl > 0.0 && cfl < 1.0)) {
    std::ostringstream os;
    os << "cfl must lie in (0, 1), got " << cfl;
    throw ConfigError(os.str());
  }
  if (!(t_end > 0.0)) throw ConfigError("t_end must be positive");
  if (!(dx > 0.0)) throw ConfigError("dx must be positive");
  TimeControls tc;
  tc.cfl = cfl;
  tc.t_end = t_end;
  tc.dt = cfl * dx / std::sqrt(cfg.g * cfg.h_s);
  return tc;
}

}  // namespace owc

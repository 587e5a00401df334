#include "doctest.h"
#include "owc/grid.hpp"
#include "owc/state.hpp"

using namespace owc;

namespace {

PhysicalConfig reference_config() {
  PhysicalConfig cfg;
  cfg.l = 30.0;
  cfg.l0 = 11.0;
  cfg.r = 1.0;
  cfg.l1 = 17.0;
  cfg.h_s = 15.0;
  cfg.h_0 = 10.0;
  cfg.zeta_w = -7.5;
  cfg.period = 1.5;
  return cfg;
}

}  // namespace

TEST_CASE("initial state is at rest with the right segment sizes") {
  const PhysicalConfig cfg = reference_config();
  const Grid grid = build_grid(cfg, 0.02);
  const State s = initial_state(cfg, grid);
  CHECK(s.t == 0.0);
  CHECK(s.q_i == 0.0);
  CHECK(s.e0.nodes() == grid.n1 + 1);
  CHECK(s.e1.nodes() == grid.n2 + 1);
  CHECK(s.e2.nodes() == grid.n4 + 1);
  for (double v : s.e0.zeta) CHECK(v == 0.0);
  for (double v : s.e0.q) CHECK(v == 0.0);
  for (double v : s.e1.zeta) CHECK(v == 0.0);
  for (double v : s.e1.q) CHECK(v == 0.0);
  for (double v : s.e2.zeta) CHECK(v == 0.0);
  for (double v : s.e2.q) CHECK(v == 0.0);
}

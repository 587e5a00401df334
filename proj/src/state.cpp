#include "owc/state.hpp"

namespace owc {

State initial_state(const PhysicalConfig& cfg, const Grid& grid) {
  validate(cfg);
  State s;
  s.t = 0.0;
  s.e0.zeta.assign(grid.n1 + 1, 0.0);
  s.e0.q.assign(grid.n1 + 1, 0.0);
  s.e1.zeta.assign(grid.n2 + 1, 0.0);
  s.e1.q.assign(grid.n2 + 1, 0.0);
  s.e2.zeta.assign(grid.n4 + 1, 0.0);
  s.e2.q.assign(grid.n4 + 1, 0.0);
  s.q_i = 0.0;
  return s;
}

}  // namespace owc

#include <cmath>

#include "doctest.h"
#include "owc/errors.hpp"
#include "owc/grid.hpp"

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
  cfg.amplitude = 1.0;
  cfg.period = 1.5;
  return cfg;
}

}  // namespace

TEST_CASE("reference geometry at dx = 0.02 yields the documented cell counts") {
  const Grid g = build_grid(reference_config(), 0.02);
  CHECK(g.n1 == 1500);
  CHECK(g.n2 == 500);
  CHECK(g.n3 == 100);
  CHECK(g.n4 == 250);
  CHECK(g.total_nodes() == 2351);
  CHECK(static_cast<int>(g.x.size()) == 2351);
}

TEST_CASE("interface nodes land exactly on the interface coordinates") {
  const Grid g = build_grid(reference_config(), 0.02);
  CHECK(g.x[g.i_step] == 0.0);
  CHECK(g.x[g.i_wall_left] == 10.0);
  CHECK(g.x[g.i_wall_right] == 12.0);
  CHECK(g.x[g.i_end] == 17.0);
  CHECK(g.x.front() == -30.0);
  CHECK(g.i_step == g.n1);
  CHECK(g.i_wall_left == g.n1 + g.n2);
  CHECK(g.i_wall_right == g.n1 + g.n2 + g.n3);
  CHECK(g.i_end == g.n1 + g.n2 + g.n3 + g.n4);
}

TEST_CASE("grid coordinates are strictly increasing with spacing dx") {
  const Grid g = build_grid(reference_config(), 0.02);
  for (size_t i = 1; i < g.x.size(); ++i) {
    CHECK(g.x[i] - g.x[i - 1] == doctest::Approx(0.02).epsilon(1e-9));
  }
}

TEST_CASE("a small symmetric geometry resolves to the expected counts") {
  PhysicalConfig cfg;
  cfg.l = 1.0;
  cfg.l0 = 0.5;
  cfg.r = 0.25;
  cfg.l1 = 1.0;
  cfg.h_s = 1.0;
  cfg.h_0 = 1.0;
  cfg.zeta_w = -0.5;
  cfg.period = 1.0;
  const Grid g = build_grid(cfg, 0.25);
  CHECK(g.n1 == 4);
  CHECK(g.n2 == 1);
  CHECK(g.n3 == 2);
  CHECK(g.n4 == 1);
}

TEST_CASE("a dx that does not divide a segment is rejected") {
  // 0.03 divides l = 30 but not l0 - r = 10.
  CHECK_THROWS_AS(build_grid(reference_config(), 0.03), ConfigError);
  CHECK_THROWS_AS(build_grid(reference_config(), 0.07), ConfigError);
  CHECK_THROWS_AS(build_grid(reference_config(), -0.02), ConfigError);
  CHECK_THROWS_AS(build_grid(reference_config(), 0.0), ConfigError);
}

TEST_CASE("a dx larger than a segment is rejected") {
  PhysicalConfig cfg = reference_config();
  CHECK_THROWS_AS(build_grid(cfg, 40.0), ConfigError);
}

TEST_CASE("time controls derive dt from the cfl number and the deep speed") {
  const PhysicalConfig cfg = reference_config();
  const TimeControls tc = make_controls(cfg, 0.02, 0.7, 5.0);
  CHECK(tc.dt ==
        doctest::Approx(0.7 * 0.02 / std::sqrt(9.81 * 15.0)).epsilon(1e-15));
  CHECK(tc.dt == doctest::Approx(1.15411e-3).epsilon(1e-4));
  CHECK(tc.cfl == 0.7);
  CHECK(tc.t_end == 5.0);
}

TEST_CASE("time controls reject out-of-range cfl and t_end") {
  const PhysicalConfig cfg = reference_config();
  CHECK_THROWS_AS(make_controls(cfg, 0.02, 0.0, 5.0), ConfigError);
  CHECK_THROWS_AS(make_controls(cfg, 0.02, 1.0, 5.0), ConfigError);
  CHECK_THROWS_AS(make_controls(cfg, 0.02, 1.5, 5.0), ConfigError);
  CHECK_THROWS_AS(make_controls(cfg, 0.02, 0.7, 0.0), ConfigError);
  CHECK_THROWS_AS(make_controls(cfg, 0.02, 0.7, -1.0), ConfigError);
}

TEST_CASE("config validation names the violated constraint") {
  PhysicalConfig cfg = reference_config();
  cfg.l1 = 5.0;  // l1 must exceed l0
  try {
    validate(cfg);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("l1>l0>r") != std::string::npos);
  }

  cfg = reference_config();
  cfg.h_0 = 20.0;  // deeper than h_s
  CHECK_THROWS_AS(validate(cfg), ConfigError);

  cfg = reference_config();
  cfg.zeta_w = -10.0;  // structure grounded: h_w = 0
  CHECK_THROWS_AS(validate(cfg), ConfigError);

  cfg = reference_config();
  cfg.zeta_w = -12.0;  // h_w negative
  CHECK_THROWS_AS(validate(cfg), ConfigError);

  CHECK_NOTHROW(validate(reference_config()));
}

TEST_CASE("derived config quantities") {
  const PhysicalConfig cfg = reference_config();
  CHECK(cfg.step_height() == 5.0);
  CHECK(cfg.wetted_depth() == 2.5);
  CHECK(cfg.wall_alpha() == doctest::Approx(0.8).epsilon(1e-15));
}

TEST_CASE("forcing is the prescribed sine") {
  const PhysicalConfig cfg = reference_config();
  CHECK(forcing(0.0, cfg) == 0.0);
  CHECK(forcing(0.375, cfg) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(forcing(0.75, cfg) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(forcing(1.125, cfg) == doctest::Approx(-1.0).epsilon(1e-12));
}

#include <cmath>

#include "doctest.h"
#include "owc/physics.hpp"

using namespace owc;

namespace {
constexpr double kG = 9.81;
}

TEST_CASE("flux of the rest state is exactly zero on both depths") {
  for (double depth : {10.0, 15.0, 2.5}) {
    const Flux2 f = flux({0.0, 0.0, depth}, kG);
    CHECK(f.mass == 0.0);
    CHECK(f.momentum == 0.0);
  }
}

TEST_CASE("flux of a pure elevation perturbation") {
  // h = 11, h_ref = 10: momentum = g/2 (121 - 100) = 103.005, mass = 0.
  const Flux2 f = flux({1.0, 0.0, 10.0}, kG);
  CHECK(f.mass == 0.0);
  CHECK(f.momentum == doctest::Approx(103.005).epsilon(1e-12));
}

TEST_CASE("flux carries the discharge as the mass component") {
  const Flux2 f = flux({0.5, 3.25, 10.0}, kG);
  CHECK(f.mass == 3.25);
  const double h = 10.5;
  CHECK(f.momentum ==
        doctest::Approx(0.5 * kG * (h * h - 100.0) + 3.25 * 3.25 / h)
            .epsilon(1e-12));
}

TEST_CASE("flux throws on a dry column") {
  CHECK_THROWS_AS(flux({-10.0, 0.0, 10.0}, kG), NumericalError);
  CHECK_THROWS_AS(flux({-12.0, 1.0, 10.0}, kG), NumericalError);
}

TEST_CASE("wave speeds at rest reduce to the gravity wave speed") {
  const WaveSpeeds ws = wave_speeds({0.0, 0.0, 15.0}, kG);
  const double c = std::sqrt(kG * 15.0);
  CHECK(ws.plus == doctest::Approx(c).epsilon(1e-15));
  CHECK(ws.minus == doctest::Approx(c).epsilon(1e-15));
}

TEST_CASE("wave speeds with flow") {
  // zeta = 0, q = 5, h_ref = 10: c = sqrt(98.1), v = 0.5.
  const WaveSpeeds ws = wave_speeds({0.0, 5.0, 10.0}, kG);
  const double c = std::sqrt(98.1);
  CHECK(ws.plus == doctest::Approx(c + 0.5).epsilon(1e-12));
  CHECK(ws.minus == doctest::Approx(c - 0.5).epsilon(1e-12));
  CHECK(ws.plus == doctest::Approx(10.4045).epsilon(1e-4));
  CHECK(ws.minus == doctest::Approx(9.4045).epsilon(1e-4));
}

TEST_CASE("speed identities: sum gives 2c, difference gives 2v") {
  const Cons u{0.8, -2.3, 10.0};
  const WaveSpeeds ws = wave_speeds(u, kG);
  const double h = water_depth(u);
  CHECK(ws.plus + ws.minus ==
        doctest::Approx(2.0 * std::sqrt(kG * h)).epsilon(1e-14));
  CHECK(ws.plus - ws.minus == doctest::Approx(2.0 * u.q / h).epsilon(1e-14));
}

TEST_CASE("riemann invariants vanish exactly at rest") {
  const RiemannPair p = to_riemann({0.0, 0.0, 15.0}, kG);
  CHECK(p.R == 0.0);
  CHECK(p.L == 0.0);
  CHECK(p.depth_ref == 15.0);
}

TEST_CASE("from_riemann of the zero pair is exactly the rest state") {
  const Cons u = from_riemann({0.0, 0.0, 10.0}, kG);
  CHECK(u.zeta == 0.0);
  CHECK(u.q == 0.0);
}

TEST_CASE("riemann transform round-trips state -> invariants -> state") {
  for (const Cons u : {Cons{0.7, 1.3, 10.0}, Cons{-0.4, -6.2, 15.0},
                       Cons{2.0, 12.0, 2.5}, Cons{0.0, 0.25, 10.0}}) {
    const RiemannPair p = to_riemann(u, kG);
    const Cons back = from_riemann(p, kG);
    CHECK(back.zeta == doctest::Approx(u.zeta).epsilon(1e-12));
    CHECK(back.q == doctest::Approx(u.q).epsilon(1e-12));
    CHECK(back.depth_rest == u.depth_rest);
  }
}

TEST_CASE("riemann transform round-trips invariants -> state -> invariants") {
  for (double R : {0.5, -0.3, 2.0}) {
    for (double L : {0.0, 0.8, -1.1}) {
      const RiemannPair p{R, L, 15.0};
      const RiemannPair back = to_riemann(from_riemann(p, kG), kG);
      CHECK(back.R == doctest::Approx(R).epsilon(1e-12));
      CHECK(back.L == doctest::Approx(L).epsilon(1e-12));
    }
  }
}

TEST_CASE("invariant definition matches 2(sqrt(gh)-sqrt(gh_ref)) +- v") {
  const Cons u{1.0, 4.0, 10.0};
  const RiemannPair p = to_riemann(u, kG);
  const double h = 11.0;
  const double common = 2.0 * (std::sqrt(kG * h) - std::sqrt(kG * 10.0));
  CHECK(p.R == doctest::Approx(common + 4.0 / 11.0).epsilon(1e-14));
  CHECK(p.L == doctest::Approx(common - 4.0 / 11.0).epsilon(1e-14));
}

TEST_CASE("to_riemann and from_riemann throw on dry input") {
  CHECK_THROWS_AS(to_riemann({-10.0, 0.0, 10.0}, kG), NumericalError);
  // A pair whose implied depth is negative: u = (R+L)/4 very negative.
  CHECK_THROWS_AS(from_riemann({-50.0, -50.0, 10.0}, kG), NumericalError);
}

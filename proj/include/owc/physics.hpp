#pragma once

#include <cmath>
#include <string>

#include "owc/errors.hpp"

namespace owc {

// Pointwise state of the shallow water system: surface elevation zeta and
// horizontal discharge q over the local rest depth (h_s before the step,
// h_0 after it). The water column height is depth_rest + zeta.
struct Cons {
  double zeta = 0.0;
  double q = 0.0;
  double depth_rest = 0.0;
};

struct Flux2 {
  double mass = 0.0;
  double momentum = 0.0;
};

// Both magnitudes are positive in subcritical flow; the left-going
// characteristic travels at -minus.
struct WaveSpeeds {
  double plus = 0.0;
  double minus = 0.0;
};

// Characteristic variables relative to the rest depth of the segment the
// point lives in. depth_ref travels with the pair so values from one
// segment cannot be silently inverted against another segment's depth.
struct RiemannPair {
  double R = 0.0;
  double L = 0.0;
  double depth_ref = 0.0;
};

inline double water_depth(const Cons& u) { return u.depth_rest + u.zeta; }

[[noreturn]] inline void throw_dry(double h, const char* where) {
  throw NumericalError(std::string("dry state in ") + where +
                       ": water column h = " + std::to_string(h));
}

// Precondition h > 0; used on hot paths where the caller has already
// checked positivity.
inline Flux2 flux_unchecked(const Cons& u, double g) {
  const double h = u.depth_rest + u.zeta;
  // (h - h_ref)(h + h_ref) = h^2 - h_ref^2, evaluated without the
  // cancellation of the squared form and exactly zero at rest.
  return {u.q, 0.5 * g * (h - u.depth_rest) * (h + u.depth_rest) + u.q * u.q / h};
}

// Conservative flux (q, g(h^2 - h_ref^2)/2 + q^2/h) with h_ref the rest
// depth, so the flux of the rest state is exactly (0, 0) on both sides of
// the step.
inline Flux2 flux(const Cons& u, double g) {
  const double h = water_depth(u);
  if (!(h > 0.0)) throw_dry(h, "flux");
  return flux_unchecked(u, g);
}

inline WaveSpeeds wave_speeds(const Cons& u, double g) {
  const double h = water_depth(u);
  if (!(h > 0.0)) throw_dry(h, "wave_speeds");
  const double c = std::sqrt(g * h);
  const double v = u.q / h;
  return {v + c, c - v};
}

inline RiemannPair to_riemann(const Cons& u, double g) {
  const double h = water_depth(u);
  if (!(h > 0.0)) throw_dry(h, "to_riemann");
  const double common = 2.0 * (std::sqrt(g * h) - std::sqrt(g * u.depth_rest));
  const double v = u.q / h;
  return {common + v, common - v, u.depth_rest};
}

// Inverse of to_riemann. zeta is evaluated as u(2c+u)/g with u=(R+L)/4 and
// c the rest wave speed, which equals (c+u)^2/g - depth_ref algebraically
// but returns exactly zero for R = L = 0. The reconstruction needs
// c + u > 0: the squared depth formula would silently fold the dry branch
// R + L <= -4c onto a positive depth, so that branch is rejected here.
inline Cons from_riemann(const RiemannPair& p, double g) {
  const double u = 0.25 * (p.R + p.L);
  const double c = std::sqrt(g * p.depth_ref);
  if (!(c + u > 0.0)) throw_dry((c + u) * std::abs(c + u) / g, "from_riemann");
  const double zeta = u * (2.0 * c + u) / g;
  const double h = p.depth_ref + zeta;
  if (!(h > 0.0)) throw_dry(h, "from_riemann");
  return {zeta, h * 0.5 * (p.R - p.L), p.depth_ref};
}

}  // namespace owc

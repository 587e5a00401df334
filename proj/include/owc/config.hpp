#pragma once

namespace owc {

// Problem definition: geometry of the channel and the immersed structure,
// bathymetry depths on both sides of the step at x = 0, fluid constants and
// the forcing wave. The structure occupies [l0 - r, l0 + r] with its wetted
// surface held at the constant elevation zeta_w (negative, below the rest
// surface).
struct PhysicalConfig {
  double g = 9.81;
  double rho = 1000.0;
  double l = 0.0;       // entry at x = -l
  double l0 = 0.0;      // structure center
  double r = 0.0;       // structure half-length
  double l1 = 0.0;      // chamber end wall
  double h_s = 0.0;     // rest depth before the step
  double h_0 = 0.0;     // rest depth after the step
  double zeta_w = 0.0;  // structure draft
  double amplitude = 1.0;
  double period = 0.0;

  double step_height() const { return h_s - h_0; }
  double wetted_depth() const { return h_0 + zeta_w; }  // h_w under the structure
  double wall_alpha() const { return 2.0 * r / wetted_depth(); }
};

// Throws ConfigError naming the violated invariant.
void validate(const PhysicalConfig& cfg);

// Prescribed entry elevation A sin(2 pi t / T).
double forcing(double t, const PhysicalConfig& cfg);

}  // namespace owc

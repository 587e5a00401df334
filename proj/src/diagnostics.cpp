#include "owc/diagnostics.hpp"

#include <cmath>
#include <numbers>

#include "owc/errors.hpp"
#include "owc/physics.hpp"

namespace owc {

EnergyReport energy_audit(const State& s, const PhysicalConfig& cfg,
                          const Grid& grid, double interior_dpdx) {
  const double g = cfg.g;
  const double rho = cfg.rho;
  EnergyReport rep;
  const std::size_t total = s.e0.zeta.size() + s.e1.zeta.size() + s.e2.zeta.size();
  rep.e_ext.reserve(total);
  rep.f_ext.reserve(total);

  double integral = 0.0;
  auto add_segment = [&](const SegmentArrays& seg, double depth) {
    const int n = seg.nodes();
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      const double zeta = seg.zeta[i];
      const double q = seg.q[i];
      const double h = depth + zeta;
      if (!(h > 0.0)) throw_dry(h, "energy_audit");
      const double e = rho * q * q / (2.0 * h) + g * rho * zeta * zeta / 2.0;
      const double f = rho * q * q * q / (2.0 * h * h) + g * rho * zeta * q;
      rep.e_ext.push_back(e);
      rep.f_ext.push_back(f);
      sum += (i == 0 || i == n - 1) ? 0.5 * e : e;
    }
    integral += sum * grid.dx;
  };
  add_segment(s.e0, cfg.h_s);
  add_segment(s.e1, cfg.h_0);
  add_segment(s.e2, cfg.h_0);

  const double h_w = cfg.wetted_depth();
  const double kinetic_int = rho * s.q_i * s.q_i / (2.0 * h_w);
  rep.e_int = kinetic_int + rho * g * cfg.zeta_w * cfg.zeta_w / 2.0;
  integral += 2.0 * cfg.r * kinetic_int;
  rep.E_fluid = integral;

  rep.f_int = s.q_i * (2.0 * cfg.r * interior_dpdx);
  rep.flux_entry = rep.f_ext[0];
  rep.flux_step_left = rep.f_ext[grid.n1];
  rep.flux_step_right = rep.f_ext[grid.n1 + 1];
  return rep;
}

double interior_pressure_gradient(double q_i_prev, double q_i_new, double dt,
                                  const PhysicalConfig& cfg) {
  if (!(dt > 0.0)) throw ConfigError("pressure gradient needs dt > 0");
  return -(cfg.rho / cfg.wetted_depth()) * (q_i_new - q_i_prev) / dt;
}

double solve_dispersion(double omega, double h_s, double g) {
  if (!(omega > 0.0 && h_s > 0.0 && g > 0.0)) {
    throw ConfigError("dispersion requires positive omega, h_s and g");
  }
  const double w2 = omega * omega;
  auto f = [&](double k) { return g * k * std::tanh(k * h_s) - w2; };
  auto df = [&](double k) {
    const double th = std::tanh(k * h_s);
    return g * th + g * k * h_s * (1.0 - th * th);
  };

  // f is strictly increasing with f(0) = -w2 < 0; expand a cheap initial
  // bracket until it straddles the root, then run Newton inside it.
  double lo = w2 / (g + h_s * w2);
  double hi = 2.0 * w2 / g;
  while (f(lo) > 0.0) lo *= 0.5;
  while (f(hi) < 0.0) hi *= 2.0;

  const double tol = std::max(1e-12, w2 * 1e-15);
  double k = 0.5 * (lo + hi);
  for (int i = 0; i < 200; ++i) {
    const double fk = f(k);
    if (std::abs(fk) < tol) return k;
    if (fk < 0.0) lo = k; else hi = k;
    const double d = df(k);
    double kn = d > 0.0 ? k - fk / d : 0.5 * (lo + hi);
    if (!(kn > lo && kn < hi)) kn = 0.5 * (lo + hi);
    k = kn;
  }
  throw NumericalError("dispersion solver did not reach tolerance for omega=" +
                       std::to_string(omega));
}

PowerReport incident_power(const PhysicalConfig& cfg, double width) {
  validate(cfg);
  if (!(width > 0.0)) throw ConfigError("width must be positive");
  PowerReport rep;
  rep.width = width;
  rep.omega = 2.0 * std::numbers::pi / cfg.period;
  rep.k = solve_dispersion(rep.omega, cfg.h_s, cfg.g);
  const double kh2 = 2.0 * rep.k * cfg.h_s;
  const double sh = std::sinh(kh2);
  const double ratio = std::isinf(sh) ? 0.0 : kh2 / sh;
  rep.c_g = (rep.omega / (2.0 * rep.k)) * (1.0 + ratio);
  rep.c_g_shallow = std::sqrt(cfg.g * cfg.h_s);
  rep.E_inc = 0.5 * cfg.rho * cfg.g * width * cfg.amplitude * cfg.amplitude;
  rep.P_inc = rep.E_inc * rep.c_g;
  return rep;
}

double absorbed_power_trace(std::span<const double> pressure,
                            std::span<const double> flux, double sample_dt,
                            double period) {
  if (pressure.size() != flux.size()) {
    throw ConfigError("pressure and flux traces must have equal length");
  }
  if (!(sample_dt > 0.0) || !(period > 0.0)) {
    throw ConfigError("sample_dt and period must be positive");
  }
  const long long n_per = std::llround(period / sample_dt);
  if (n_per < 1 || pressure.size() < static_cast<std::size_t>(n_per) + 1) {
    throw ConfigError("trace shorter than one period");
  }
  const std::size_t end = pressure.size() - 1;
  const std::size_t begin = end - static_cast<std::size_t>(n_per);
  double sum = 0.0;
  for (std::size_t i = begin; i < end; ++i) {
    sum += 0.5 * (pressure[i] * flux[i] + pressure[i + 1] * flux[i + 1]) *
           sample_dt;
  }
  return sum / (static_cast<double>(n_per) * sample_dt);
}

}  // namespace owc

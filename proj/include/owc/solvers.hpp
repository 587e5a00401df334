#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "owc/errors.hpp"

// Small dense root-finding utilities shared by the boundary couplers and the
// dispersion solver. All solvers are deterministic and allocation-free on
// the success path.

namespace owc {

struct Newton2x2Options {
  double tol = 1e-12;  // infinity norm of the residual
  int max_iter = 50;
  int max_halvings = 40;
};

struct Newton2x2Result {
  std::array<double, 2> x{};
  std::array<double, 2> residual{};
  int iterations = 0;
  bool converged = false;
};

// Damped Newton for F: R^2 -> R^2 with an analytic Jacobian. fn returns the
// residual, jac the row-major Jacobian d f_i / d x_j. The line search halves
// the step until the residual norm decreases; an evaluation that throws
// NumericalError (a dry state probed by an overlong step) is treated as an
// infinite residual and the step shrinks.
template <class Fn, class Jac>
Newton2x2Result newton_2x2(Fn fn, Jac jac, std::array<double, 2> x0,
                           const Newton2x2Options& opts = {}) {
  auto norm = [](const std::array<double, 2>& v) {
    return std::max(std::abs(v[0]), std::abs(v[1]));
  };
  Newton2x2Result out;
  out.x = x0;
  out.residual = fn(out.x);
  double fnorm = norm(out.residual);
  for (out.iterations = 0; out.iterations < opts.max_iter; ++out.iterations) {
    if (fnorm < opts.tol) {
      out.converged = true;
      return out;
    }
    const std::array<std::array<double, 2>, 2> J = jac(out.x);
    const double det = J[0][0] * J[1][1] - J[0][1] * J[1][0];
    if (det == 0.0 || !std::isfinite(det)) return out;
    const double dx0 = (-out.residual[0] * J[1][1] + out.residual[1] * J[0][1]) / det;
    const double dx1 = (-out.residual[1] * J[0][0] + out.residual[0] * J[1][0]) / det;
    double scale = 1.0;
    bool accepted = false;
    for (int h = 0; h < opts.max_halvings; ++h) {
      const std::array<double, 2> trial{out.x[0] + scale * dx0, out.x[1] + scale * dx1};
      bool ok = true;
      std::array<double, 2> ftrial{};
      try {
        ftrial = fn(trial);
      } catch (const NumericalError&) {
        ok = false;
      }
      if (ok && std::isfinite(ftrial[0]) && std::isfinite(ftrial[1]) &&
          (norm(ftrial) < fnorm || norm(ftrial) < opts.tol)) {
        out.x = trial;
        out.residual = ftrial;
        fnorm = norm(ftrial);
        accepted = true;
        break;
      }
      scale *= 0.5;
    }
    if (!accepted) return out;
  }
  out.converged = fnorm < opts.tol;
  return out;
}

struct ScalarRootOptions {
  double tol = 1e-12;  // absolute residual
  int max_iter = 80;
  int scan_points = 256;  // fallback bracket scan resolution
};

struct ScalarRootResult {
  double x = 0.0;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Plain bisection on a sign-change bracket, refined until the residual meets
// tol or the interval collapses to machine width.
template <class Fn>
ScalarRootResult bisect(Fn fn, double lo, double hi, double flo, double fhi,
                        const ScalarRootOptions& opts = {}) {
  ScalarRootResult out;
  if (flo == 0.0) return {lo, 0.0, 0, true};
  if (fhi == 0.0) return {hi, 0.0, 0, true};
  if ((flo > 0.0) == (fhi > 0.0)) return out;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = fn(mid);
    ++out.iterations;
    if (std::abs(fmid) < opts.tol || mid == lo || mid == hi) {
      out.x = mid;
      out.residual = fmid;
      out.converged = std::abs(fmid) < opts.tol || std::abs(fmid) <= 4.0 * opts.tol;
      return out;
    }
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
      fhi = fmid;
    }
  }
  out.x = 0.5 * (lo + hi);
  out.residual = fn(out.x);
  out.converged = std::abs(out.residual) < opts.tol;
  return out;
}

// Safeguarded scalar Newton. Seeds at `seed`, clamps iterates to [lo, hi],
// and returns immediately when the seed is already an exact root so a rest
// state passes through bit-for-bit. If Newton stalls or escapes, every sign
// change in [lo, hi] is located by a uniform scan instead, each is bisected,
// and the root nearest the seed wins.
template <class Fn, class DFn>
ScalarRootResult newton_bisect(Fn fn, DFn dfn, double seed, double lo, double hi,
                               const ScalarRootOptions& opts = {}) {
  ScalarRootResult out;
  double x = std::min(std::max(seed, lo), hi);
  double fx = fn(x);
  if (fx == 0.0) return {x, 0.0, 0, true};
  for (int i = 0; i < opts.max_iter; ++i) {
    if (std::abs(fx) < opts.tol) return {x, fx, i, true};
    const double d = dfn(x);
    if (d == 0.0 || !std::isfinite(d)) break;
    double xn = x - fx / d;
    if (!(xn >= lo && xn <= hi)) break;
    const double fn_next = fn(xn);
    if (!std::isfinite(fn_next)) break;
    if (std::abs(fn_next) >= std::abs(fx) && std::abs(fn_next) >= opts.tol) break;
    x = xn;
    fx = fn_next;
    out.iterations = i + 1;
  }
  if (std::abs(fx) < opts.tol) return {x, fx, out.iterations, true};

  // Fallback: global scan for brackets, nearest root to the seed wins.
  ScalarRootResult best;
  double best_dist = 0.0;
  const int n = opts.scan_points;
  double xa = lo;
  double fa = fn(xa);
  for (int i = 1; i <= n; ++i) {
    const double xb = lo + (hi - lo) * static_cast<double>(i) / n;
    const double fb = fn(xb);
    if (fa == 0.0 || (fa > 0.0) != (fb > 0.0)) {
      ScalarRootResult r = bisect(fn, xa, xb, fa, fb, opts);
      if (r.converged) {
        const double dist = std::abs(r.x - seed);
        if (!best.converged || dist < best_dist) {
          best = r;
          best_dist = dist;
        }
      }
    }
    xa = xb;
    fa = fb;
  }
  return best;
}

}  // namespace owc

#pragma once

// Slow, independent evaluation of w(x + iy) = K + iL straight from the
// integral representations
//
//   K(x, y) = 1/sqrt(pi) * int_0^inf exp(-t^2/4 - y t) cos(x t) dt
//   L(x, y) = 1/sqrt(pi) * int_0^inf exp(-t^2/4 - y t) sin(x t) dt
//
// in __float128 arithmetic with composite Gauss-Legendre panels. Shares no
// code with any approximation in the library and is meant for tests and
// validation only. Requires linking libquadmath.
//
// The integral is entire in z, so negative y is accepted as well (analytic
// continuation into the lower half-plane), as long as exp(y^2) stays finite.

#include <quadmath.h>

#include <array>
#include <cmath>
#include <complex>
#include <string>

#include "vecfad/errors.hpp"

namespace vecfad {

struct oracle_options {
  /// Integration stops where exp(-t^2/4 - y t) drops below this envelope.
  double envelope = 1e-40;
  /// Relative tolerance on each component between successive refinements.
  double rel_tol = 1e-20;
  /// Absolute floor added to the tolerance.
  double abs_tol = 1e-32;
  /// Refinement stops with convergence_error beyond this many panels.
  int max_panels = 10000;
};

namespace detail {

using quad = __float128;

inline constexpr int oracle_order = 20;

struct gauss_legendre_rule {
  std::array<quad, oracle_order> nodes{};
  std::array<quad, oracle_order> weights{};
};

// Newton on the Legendre three-term recurrence, carried out in quad precision.
inline gauss_legendre_rule make_gauss_legendre() {
  gauss_legendre_rule rule;
  constexpr int n = oracle_order;
  const quad pi = M_PIq;
  for (int i = 0; i < n; ++i) {
    quad x = cosq(pi * (i + 0.75Q) / (n + 0.5Q));
    quad dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      quad p0 = 1;
      quad p1 = x;
      for (int k = 2; k <= n; ++k) {
        const quad p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      const quad dx = p1 / dp;
      x -= dx;
      if (fabsq(dx) < 1e-33Q) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2 / ((1 - x * x) * dp * dp);
  }
  return rule;
}

inline const gauss_legendre_rule& oracle_rule() {
  static const gauss_legendre_rule rule = make_gauss_legendre();
  return rule;
}

struct quad_pair {
  quad re = 0;
  quad im = 0;
};

inline quad_pair integrate_panels(quad x, quad y, quad upper, int panels) {
  const auto& rule = oracle_rule();
  const quad width = upper / panels;
  quad_pair sum;
  for (int p = 0; p < panels; ++p) {
    const quad mid = (p + 0.5Q) * width;
    quad_pair local;
    for (int i = 0; i < oracle_order; ++i) {
      const quad t = mid + 0.5Q * width * rule.nodes[i];
      const quad env = expq(-t * t / 4 - y * t) * rule.weights[i];
      quad s;
      quad c;
      sincosq(x * t, &s, &c);
      local.re += env * c;
      local.im += env * s;
    }
    sum.re += local.re;
    sum.im += local.im;
  }
  const quad scale = 0.5Q * width / sqrtq(M_PIq);
  return {sum.re * scale, sum.im * scale};
}

}  // namespace detail

/// K(x, y) + i L(x, y) by direct quadrature. Orders of magnitude slower than
/// w_reference; throws convergence_error when the panel budget is exhausted
/// (roughly |x| > 2000 at the default budget).
inline std::complex<double> quadrature_oracle(double x, double y,
                                              const oracle_options& opt = {}) {
  using detail::quad;
  if (!std::isfinite(x) || !std::isfinite(y)) {
    throw param_error("quadrature_oracle: non-finite argument");
  }
  // Truncation point: t^2/4 + y t = -ln(envelope).
  const quad depth = -logq(static_cast<quad>(opt.envelope));
  const quad qy = y;
  const quad upper = 2 * (-qy + sqrtq(qy * qy + depth));

  // Start at roughly one oscillation period per panel.
  const double periods = static_cast<double>(upper) * std::abs(x) / (2 * M_PI);
  int panels = std::max(16, static_cast<int>(std::ceil(periods)));
  if (panels > opt.max_panels) {
    throw convergence_error("quadrature_oracle: x = " + std::to_string(x) +
                            " needs more than " +
                            std::to_string(opt.max_panels) + " panels");
  }

  detail::quad_pair coarse = detail::integrate_panels(x, qy, upper, panels);
  while (2 * panels <= opt.max_panels) {
    panels *= 2;
    const detail::quad_pair fine = detail::integrate_panels(x, qy, upper, panels);
    const quad tol_re = opt.abs_tol + opt.rel_tol * fabsq(fine.re);
    const quad tol_im = opt.abs_tol + opt.rel_tol * fabsq(fine.im);
    if (fabsq(fine.re - coarse.re) <= tol_re &&
        fabsq(fine.im - coarse.im) <= tol_im) {
      return {static_cast<double>(fine.re), static_cast<double>(fine.im)};
    }
    coarse = fine;
  }
  throw convergence_error("quadrature_oracle: no convergence at (" +
                          std::to_string(x) + ", " + std::to_string(y) +
                          ") within " + std::to_string(opt.max_panels) +
                          " panels");
}

}  // namespace vecfad

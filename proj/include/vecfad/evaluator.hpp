#pragma once

// Single-domain Faddeeva evaluator: vector x, scalar y.
//
// Per call: build the abscissas, sample w at |y| with the reference engine,
// fit a not-a-knot spline through the complex ordinates and interpolate at
// every x. Below the real axis the exact reflection
//   w(z) = 2 exp(-z^2) - conj(w(conj z))
// is applied pointwise, and part selection happens last.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "vecfad/csv.hpp"
#include "vecfad/cubic_spline.hpp"
#include "vecfad/errors.hpp"
#include "vecfad/interp_grid.hpp"
#include "vecfad/reference_engine.hpp"

namespace vecfad {

/// Smallest admissible |y|.
inline constexpr double min_abs_y = 1e-8;

enum class part_selection { real = 1, imag = 2, complex = 3 };

struct eval_request {
  std::span<const double> xs;
  double y = 0.0;
  part_selection part = part_selection::complex;
};

struct eval_options {
  /// Worker threads for the query phase; 1 keeps everything on the caller.
  unsigned threads = 1;
  lookup_mode lookup = lookup_mode::binary_search;
};

struct eval_result {
  part_selection part = part_selection::complex;
  /// Filled when part == complex.
  std::vector<complex_value> values;
  /// Filled when part is real or imag.
  std::vector<double> components;
  std::size_t grid_size = 0;
  double y = 0.0;

  std::size_t size() const {
    return part == part_selection::complex ? values.size() : components.size();
  }
};

inline void check_domain(std::span<const double> xs, double y, double bound) {
  if (xs.empty()) throw shape_error("evaluate: x vector is empty");
  bool ok = true;
  for (double x : xs) ok &= (std::abs(x) <= bound);
  if (!ok) {
    for (double x : xs) {
      if (!(std::abs(x) <= bound)) {
        throw domain_error(domain_axis::x, "Computation is terminated: |x| = " +
                                               csv::format_digits(std::abs(x), 10) +
                                               " exceeds bound " +
                                               csv::format_digits(bound, 10));
      }
    }
  }
  if (!(std::abs(y) >= min_abs_y) || !std::isfinite(y)) {
    throw domain_error(domain_axis::y, "Computation is terminated: |y| = " +
                                           csv::format_digits(std::abs(y), 6) +
                                           " is below 1e-8");
  }
}

/// Spline through the reference ordinates at (abscissas, |y|).
inline cubic_spline<complex_value> fit_grid(const grid_spec& spec, double abs_y) {
  const auto grid = sample_ordinates(build_abscissas(spec), abs_y);
  return cubic_spline<complex_value>::fit_not_a_knot(grid.abscissas, grid.ordinates);
}

namespace detail {

inline void query_spline(const cubic_spline<complex_value>& spline,
                         std::span<const double> xs, std::span<complex_value> out,
                         const eval_options& opt) {
  const unsigned threads = std::max(1u, opt.threads);
  if (threads == 1 || xs.size() < 4096) {
    spline.eval(xs, out, opt.lookup);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (xs.size() + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t lo = t * chunk;
    if (lo >= xs.size()) break;
    const std::size_t len = std::min(chunk, xs.size() - lo);
    pool.emplace_back([&, lo, len] {
      spline.eval(xs.subspan(lo, len), out.subspan(lo, len), opt.lookup);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace detail

inline eval_result evaluate(const eval_request& req, const grid_spec& spec = {},
                            const eval_options& opt = {}) {
  check_domain(req.xs, req.y, spec.reach());
  const double abs_y = std::abs(req.y);
  const auto spline = fit_grid(spec, abs_y);

  std::vector<complex_value> w(req.xs.size());
  detail::query_spline(spline, req.xs, w, opt);

  if (req.y < 0.0) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      const complex_value z{req.xs[i], req.y};
      w[i] = 2.0 * std::exp(-z * z) - std::conj(w[i]);
    }
  }

  eval_result result;
  result.part = req.part;
  result.grid_size = spline.knots().size();
  result.y = req.y;
  switch (req.part) {
    case part_selection::complex:
      result.values = std::move(w);
      break;
    case part_selection::real:
      result.components.reserve(w.size());
      for (const auto& v : w) result.components.push_back(v.real());
      break;
    case part_selection::imag:
      result.components.reserve(w.size());
      for (const auto& v : w) result.components.push_back(v.imag());
      break;
  }
  return result;
}

/// Complex-valued convenience overload.
inline std::vector<complex_value> evaluate(std::span<const double> xs, double y,
                                           const grid_spec& spec = {},
                                           const eval_options& opt = {}) {
  return evaluate(eval_request{xs, y, part_selection::complex}, spec, opt).values;
}

/// Voigt line shape g_V(nu - nu0) = sqrt(ln2 / pi) / alphaD * K(x, y) with
/// x = sqrt(ln2) (nu - nu0) / alphaD and y = sqrt(ln2) alphaL / alphaD.
inline std::vector<double> voigt_profile(std::span<const double> freqs, double nu0,
                                         double alpha_lorentz, double alpha_doppler,
                                         const grid_spec& spec = {},
                                         const eval_options& opt = {}) {
  if (!(alpha_doppler > 0.0) || !std::isfinite(alpha_doppler)) {
    throw param_error("voigt_profile: alphaD must be positive");
  }
  if (!(alpha_lorentz >= 0.0) || !std::isfinite(alpha_lorentz)) {
    throw param_error("voigt_profile: alphaL must be non-negative");
  }
  const double sqrt_ln2 = std::sqrt(std::numbers::ln2);
  std::vector<double> xs(freqs.size());
  for (std::size_t i = 0; i < freqs.size(); ++i) {
    xs[i] = sqrt_ln2 * (freqs[i] - nu0) / alpha_doppler;
  }
  const double y = sqrt_ln2 * alpha_lorentz / alpha_doppler;
  auto k = evaluate(eval_request{xs, y, part_selection::real}, spec, opt).components;
  const double prefactor =
      std::sqrt(std::numbers::ln2 / std::numbers::pi) / alpha_doppler;
  for (double& v : k) v *= prefactor;
  return k;
}

}  // namespace vecfad

#pragma once

// Humlicek-family rational approximations of w(z), kept as accuracy and speed
// baselines for the interpolation scheme.
//
//   humlicek_sum            (1/2) sum_k [(g_k + i t_k)/(z - x_k + i d) - (g_k - i t_k)/(z + x_k + i d)]
//   quotient_coefficients   the same sum collapsed into one polynomial ratio
//   far_wing_rational       (i z / sqrt(pi)) / (z^2 - 1/2)
//   kuntz_real              real part of the far-wing rational in x, y form
//   schreier_two_domain     quotient inside |x| + y <= 15, far wing outside

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "vecfad/errors.hpp"
#include "vecfad/hermite.hpp"
#include "vecfad/reference_engine.hpp"

namespace vecfad {

struct humlicek_params {
  int n = 20;
  double delta = 1.55;
  std::vector<double> roots;    // ascending Hermite roots
  std::vector<double> weights;  // Gauss-Hermite weights
  std::vector<double> gamma;    // -(1/pi) w_k e^{d^2} sin(2 x_k d)
  std::vector<double> theta;    //  (1/pi) w_k e^{d^2} cos(2 x_k d)
};

inline humlicek_params make_humlicek_params(int n = 20, double delta = 1.55) {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw param_error("make_humlicek_params: delta must be positive");
  }
  humlicek_params p;
  p.n = n;
  p.delta = delta;
  auto rule = hermite_roots_weights(n);
  p.roots = std::move(rule.roots);
  p.weights = std::move(rule.weights);
  p.gamma.resize(p.roots.size());
  p.theta.resize(p.roots.size());
  const double scale = std::exp(delta * delta) / std::numbers::pi;
  for (std::size_t k = 0; k < p.roots.size(); ++k) {
    p.gamma[k] = -scale * p.weights[k] * std::sin(2.0 * p.roots[k] * delta);
    p.theta[k] = scale * p.weights[k] * std::cos(2.0 * p.roots[k] * delta);
  }
  return p;
}

/// (1/2) sum over all n roots.
inline complex_value humlicek_full_sum(complex_value z, const humlicek_params& p) {
  const complex_value shift{0.0, p.delta};
  complex_value sum{};
  for (std::size_t k = 0; k < p.roots.size(); ++k) {
    const complex_value res_plus{p.gamma[k], p.theta[k]};
    const complex_value res_minus{p.gamma[k], -p.theta[k]};
    sum += res_plus / (z - p.roots[k] + shift) - res_minus / (z + p.roots[k] + shift);
  }
  return 0.5 * sum;
}

/// Humlicek sum; for even n the mirrored root pairs contribute identical terms,
/// so only the first n/2 (negative) roots are visited and the 1/2 drops.
inline complex_value humlicek_sum(complex_value z, const humlicek_params& p) {
  if (p.n % 2 != 0) return humlicek_full_sum(z, p);
  const complex_value shift{0.0, p.delta};
  complex_value sum{};
  const auto half = static_cast<std::size_t>(p.n / 2);
  for (std::size_t k = 0; k < half; ++k) {
    const complex_value res_plus{p.gamma[k], p.theta[k]};
    const complex_value res_minus{p.gamma[k], -p.theta[k]};
    sum += res_plus / (z - p.roots[k] + shift) - res_minus / (z + p.roots[k] + shift);
  }
  return sum;
}

/// Single-quotient form: sum alpha_k z^k / sum beta_l z^l with numerator
/// degree 2*ceil(n/2) - 1 and denominator degree 2*ceil(n/2). Coefficients are
/// stored lowest power first.
struct quotient_coefficients {
  std::vector<complex_value> alpha;
  std::vector<complex_value> beta;
  /// max|beta| / min|beta| over nonzero coefficients exceeded 1e30.
  bool conditioning_warning = false;
  double beta_spread = 0.0;
};

namespace detail {

/// Working precision for the quotient expansion.
using mp_real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<50>,
                                              boost::multiprecision::et_off>;

struct mp_complex {
  mp_real re = 0;
  mp_real im = 0;
};

inline mp_complex operator*(const mp_complex& a, const mp_complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline std::vector<mp_complex> convolve(const std::vector<mp_complex>& a,
                                        const std::vector<mp_complex>& b) {
  std::vector<mp_complex> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      const mp_complex t = a[i] * b[j];
      out[i + j].re += t.re;
      out[i + j].im += t.im;
    }
  }
  return out;
}

inline complex_value to_double(const mp_complex& c) {
  return {static_cast<double>(c.re), static_cast<double>(c.im)};
}

}  // namespace detail

/// Expands the partial-fraction sum into one quotient. Mirrored roots are
/// paired into quadratic factors (z + i d)^2 - x_k^2; for odd n the zero root
/// forms the factor (z + i d)^2 on its own.
///
/// Near the real axis the quotient amplifies coefficient perturbations by
/// several orders of magnitude, so roots, weights, residue parts and the
/// expansion are all recomputed in 50-digit arithmetic from (n, delta) and
/// each coefficient is rounded once to double.
inline quotient_coefficients make_quotient_coefficients(const humlicek_params& p) {
  using detail::mp_complex;
  using detail::mp_real;
  const mp_real d = p.delta;
  const int pairs = (p.n + 1) / 2;  // ceil(n/2)

  const auto rule = basic_hermite_roots_weights<mp_real>(p.n);
  const mp_real scale = exp(d * d) / detail::pi_of<mp_real>();

  std::vector<std::vector<mp_complex>> factors;
  std::vector<std::vector<mp_complex>> numerators;
  for (int k = 0; k < pairs; ++k) {
    const mp_real x = rule.roots[static_cast<std::size_t>(k)];
    const mp_real w = rule.weights[static_cast<std::size_t>(k)];
    const mp_real g = -scale * w * sin(2 * x * d);
    const mp_real t = scale * w * cos(2 * x * d);
    // (z + i d)^2 - x^2 = z^2 + 2 i d z - (d^2 + x^2)
    factors.push_back({{-(d * d + x * x), 0}, {0, 2 * d}, {1, 0}});
    // Pair numerator over that factor: 2 i t z + (2 g x - 2 t d).
    const bool lone_middle = (p.n % 2 == 1) && (k == pairs - 1);
    const mp_real m = lone_middle ? 1 : 2;
    numerators.push_back({{m * (g * x - t * d), 0}, {0, m * t}});
  }

  std::vector<mp_complex> denominator{{1, 0}};
  for (const auto& f : factors) denominator = detail::convolve(denominator, f);

  std::vector<mp_complex> numerator(static_cast<std::size_t>(2 * pairs));
  for (int k = 0; k < pairs; ++k) {
    std::vector<mp_complex> term = numerators[static_cast<std::size_t>(k)];
    for (int j = 0; j < pairs; ++j) {
      if (j != k) term = detail::convolve(term, factors[static_cast<std::size_t>(j)]);
    }
    for (std::size_t i = 0; i < term.size(); ++i) {
      numerator[i].re += term[i].re;
      numerator[i].im += term[i].im;
    }
  }

  quotient_coefficients q;
  q.alpha.reserve(numerator.size());
  q.beta.reserve(denominator.size());
  for (const auto& c : numerator) q.alpha.push_back(detail::to_double(c));
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (const auto& c : denominator) {
    q.beta.push_back(detail::to_double(c));
    const double mag = std::abs(q.beta.back());
    if (mag > 0.0) {
      lo = std::min(lo, mag);
      hi = std::max(hi, mag);
    }
  }
  q.beta_spread = hi / lo;
  q.conditioning_warning = q.beta_spread > 1e30;
  return q;
}

namespace detail {

struct lpair {
  long double re;
  long double im;
};

// Horner in extended precision on split real/imaginary parts.
inline lpair horner(const std::vector<complex_value>& coeffs, long double zr,
                    long double zi) {
  long double ar = 0.0L;
  long double ai = 0.0L;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    const long double nr = ar * zr - ai * zi + it->real();
    const long double ni = ar * zi + ai * zr + it->imag();
    ar = nr;
    ai = ni;
  }
  return {ar, ai};
}

}  // namespace detail

/// Numerator over denominator, both by Horner. Accumulation is in long double;
/// in plain double the cancellation near the real axis swamps the
/// approximation error for y below ~1e-5.
inline complex_value quotient_eval(complex_value z, const quotient_coefficients& q) {
  const long double zr = z.real();
  const long double zi = z.imag();
  const auto num = detail::horner(q.alpha, zr, zi);
  const auto den = detail::horner(q.beta, zr, zi);
  const long double inv = 1.0L / (den.re * den.re + den.im * den.im);
  return {static_cast<double>((num.re * den.re + num.im * den.im) * inv),
          static_cast<double>((num.im * den.re - num.re * den.im) * inv)};
}

inline complex_value far_wing_rational(complex_value z) {
  const complex_value iz{-z.imag(), z.real()};
  return (iz * std::numbers::inv_sqrtpi) / (z * z - 0.5);
}

/// (a1 + b1 x^2) / (a2 + b2 x^2 + x^4) with the exact forms of the coefficients.
inline double kuntz_real(double x, double y) {
  const double isp = std::numbers::inv_sqrtpi;
  const double y2 = y * y;
  const double a1 = 0.5 * isp * y + isp * y * y2;
  const double b1 = isp * y;
  const double a2 = 0.25 + y2 + y2 * y2;
  const double b2 = -1.0 + 2.0 * y2;
  const double x2 = x * x;
  return (a1 + b1 * x2) / (a2 + b2 * x2 + x2 * x2);
}

/// True where the two-domain scheme uses the quotient (|x| + y <= 15).
inline bool schreier_uses_quotient(complex_value z) noexcept {
  return std::abs(z.real()) + z.imag() <= 15.0;
}

inline complex_value schreier_two_domain(complex_value z, const quotient_coefficients& q) {
  return schreier_uses_quotient(z) ? quotient_eval(z, q) : far_wing_rational(z);
}

}  // namespace vecfad

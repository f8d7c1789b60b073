#pragma once

// High-accuracy Faddeeva function w(z) for the upper half-plane.
//
// Three-domain scheme built on sampling by incomplete cosine expansion of
// the sinc function:
//
//   |z| > 8                       Laplace continued fraction, depth 11
//   |z| <= 8, y <  0.05|x|        pole-free transformed sum
//   |z| <= 8, y >= 0.05|x|        Omega sum at the shifted argument z + i*sigma/2
//
// Relative error is ~1e-12 or better everywhere in Im(z) >= 0. This engine
// samples the interpolation grid and serves as the accuracy reference for
// everything else in the library.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

namespace vecfad {

using complex_value = std::complex<double>;

namespace detail {

/// a / b without the libgcc overflow-guarded division; every denominator
/// reaching this is O(1e-3 .. 1e8) in modulus.
inline complex_value fast_div(complex_value a, complex_value b) noexcept {
  const double br = b.real();
  const double bi = b.imag();
  const double inv = 1.0 / (br * br + bi * bi);
  return {(a.real() * br + a.imag() * bi) * inv,
          (a.imag() * br - a.real() * bi) * inv};
}

inline complex_value fast_mul(complex_value a, complex_value b) noexcept {
  return {a.real() * b.real() - a.imag() * b.imag(),
          a.real() * b.imag() + a.imag() * b.real()};
}

}  // namespace detail

/// Precomputed expansion coefficients of the sampling approximation.
/// Arrays are 0-based: element [m-1] holds the coefficient with index m.
struct fadsamp_coefficients {
  static constexpr int sampling_count = 23;  // N
  static constexpr int term_count = 23;      // M
  static constexpr int extended_count = term_count + 2;
  static constexpr double step = 0.25;   // h
  static constexpr double sigma = 2.75;  // shift parameter

  std::array<double, extended_count> A{};
  std::array<complex_value, extended_count> B{};  // purely imaginary
  std::array<double, extended_count> C{};
  std::array<complex_value, extended_count> kappa{};
  std::array<complex_value, extended_count> lambda{};
  std::array<double, extended_count> mu{};
  std::array<double, extended_count> nu{};
};

/// Builds the coefficient tables. Indices M+1 and M+2, needed by the
/// transformed sum, use the same closed forms with M held at 23.
inline fadsamp_coefficients precompute_fadsamp() {
  using std::numbers::pi;
  using c = fadsamp_coefficients;
  constexpr int N = c::sampling_count;
  constexpr double M = c::term_count;
  constexpr double h = c::step;
  constexpr double s = c::sigma;
  const double sqrt_pi = std::sqrt(pi);

  fadsamp_coefficients out;
  for (int m = 1; m <= c::extended_count; ++m) {
    const double mh = m - 0.5;
    double sin_sum = 0.0;
    double cos_sum = 0.0;
    for (int n = -N; n <= N; ++n) {
      const double env = std::exp(s * s / 4.0 - n * n * h * h);
      const double phase = pi * mh * (n * h + s / 2.0) / (M * h);
      sin_sum += env * std::sin(phase);
      cos_sum += env * std::cos(phase);
    }
    const auto i = static_cast<std::size_t>(m - 1);
    out.A[i] = sqrt_pi * mh / (2.0 * M * M * h) * sin_sum;
    out.B[i] = {0.0, -cos_sum / (M * sqrt_pi)};
    out.C[i] = pi * mh / (2.0 * M * h);

    const double c2 = out.C[i] * out.C[i];
    const double half_s2 = (s / 2.0) * (s / 2.0);
    out.kappa[i] = out.B[i] * (c2 - half_s2) + complex_value{0.0, out.A[i] * s};
    out.lambda[i] = out.B[i];
    out.mu[i] = (c2 + half_s2) * (c2 + half_s2);
    out.nu[i] = 2.0 * c2 - s * s / 2.0;
  }
  return out;
}

/// Process-wide immutable table, built on first use.
inline const fadsamp_coefficients& default_fadsamp() {
  static const fadsamp_coefficients table = precompute_fadsamp();
  return table;
}

/// Omega(z + i*sigma/2) summed over m = 1..M.
inline complex_value omega_sum(complex_value z, const fadsamp_coefficients& c) {
  const complex_value zs = z + complex_value{0.0, c.sigma / 2.0};
  const complex_value zs2 = detail::fast_mul(zs, zs);
  complex_value sum{};
  for (int m = 0; m < c.term_count; ++m) {
    const complex_value num = c.A[m] + detail::fast_mul(c.B[m], zs);
    sum += detail::fast_div(num, c.C[m] * c.C[m] - zs2);
  }
  return sum;
}

/// e^{-z^2} + z * sum_{m=1}^{M+2} (kappa_m - lambda_m z^2) / (mu_m - nu_m z^2 + z^4).
/// Stays accurate down to (and on) the real axis.
inline complex_value transformed_sum(complex_value z,
                                     const fadsamp_coefficients& c) {
  const complex_value z2 = detail::fast_mul(z, z);
  const complex_value z4 = detail::fast_mul(z2, z2);
  complex_value sum{};
  for (int m = 0; m < c.extended_count; ++m) {
    const complex_value num = c.kappa[m] - detail::fast_mul(c.lambda[m], z2);
    const complex_value den = c.mu[m] - c.nu[m] * z2 + z4;
    sum += detail::fast_div(num, den);
  }
  return std::exp(-z2) + detail::fast_mul(z, sum);
}

/// Laplace continued fraction, evaluated innermost level first at fixed depth.
inline complex_value laplace_cf(complex_value z) {
  constexpr int depth = 11;
  complex_value t = z;
  for (int k = depth; k >= 1; --k) {
    t = z - detail::fast_div(complex_value{0.5 * k, 0.0}, t);
  }
  return detail::fast_div(complex_value{0.0, std::numbers::inv_sqrtpi}, t);
}

enum class reference_branch { omega_sum, transformed_sum, continued_fraction };

/// Branch chosen by w_reference for z; ties fall to the Omega sum.
inline reference_branch reference_dispatch(complex_value z) noexcept {
  const double x = z.real();
  const double y = z.imag();
  if (x * x + y * y > 64.0) return reference_branch::continued_fraction;
  if (y < 0.05 * std::abs(x)) return reference_branch::transformed_sum;
  return reference_branch::omega_sum;
}

/// w(z) for Im(z) >= 0. Callers needing the lower half-plane reflect.
inline complex_value w_reference(complex_value z,
                                 const fadsamp_coefficients& c) {
  switch (reference_dispatch(z)) {
    case reference_branch::continued_fraction:
      return laplace_cf(z);
    case reference_branch::transformed_sum:
      return transformed_sum(z, c);
    case reference_branch::omega_sum:
      break;
  }
  return omega_sum(z, c);
}

inline complex_value w_reference(complex_value z) {
  return w_reference(z, default_fadsamp());
}

/// w anywhere in the plane, via w(z) = 2 e^{-z^2} - conj(w(conj z)) below the
/// real axis.
inline complex_value w_reference_full_plane(complex_value z) {
  if (z.imag() >= 0.0) return w_reference(z);
  return 2.0 * std::exp(-z * z) - std::conj(w_reference(std::conj(z)));
}

}  // namespace vecfad

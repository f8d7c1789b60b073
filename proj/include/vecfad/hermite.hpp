#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "vecfad/errors.hpp"

namespace vecfad {

/// T is double, long double or a multiprecision type with ADL math functions.
template <typename T>
struct basic_hermite_rule {
  std::vector<T> roots;    // ascending
  std::vector<T> weights;  // Gauss-Hermite weights, sum = sqrt(pi)
};

using hermite_rule = basic_hermite_rule<double>;

/// Hermite functions at x: {psi_n(x), psi_{n-1}(x)} with
/// psi_k = H_k e^{-x^2/2} / sqrt(2^k k! sqrt(pi)). They are bounded by 1 in
/// modulus for every k, so root residuals are meaningful on an absolute scale.
namespace detail {

template <typename T>
T pi_of() {
  using std::acos;
  return acos(T(-1));
}

/// log(k!) summed directly; k stays small here.
template <typename T>
T log_factorial(int k) {
  using std::log;
  T sum = 0;
  for (int i = 2; i <= k; ++i) sum += log(T(i));
  return sum;
}

}  // namespace detail

template <typename T>
std::pair<T, T> scaled_hermite(int n, T x) {
  using std::exp;
  using std::sqrt;
  T prev = 0;
  T curr = exp(T(-0.5) * x * x) / sqrt(sqrt(detail::pi_of<T>()));
  for (int k = 0; k < n; ++k) {
    const T next = x * sqrt(T(2) / T(k + 1)) * curr - sqrt(T(k) / T(k + 1)) * prev;
    prev = curr;
    curr = next;
  }
  return {curr, prev};
}

/// log|H_k(x)| recovered from psi_k(x).
template <typename T>
T log_abs_hermite(int k, T x, T psi) {
  using std::abs;
  using std::log;
  const T log_norm = T(0.5) * (T(k) * log(T(2)) + detail::log_factorial<T>(k) +
                               T(0.5) * log(detail::pi_of<T>()));
  return log(abs(psi)) + T(0.5) * x * x + log_norm;
}

/// Roots and weights of H_n for 1 <= n <= 64, computed in precision T.
///
/// Roots of H_k interlace those of H_{k-1}, so the roots are built up degree by
/// degree: each root of H_n is bracketed between consecutive roots of H_{n-1}
/// (outer brackets closed by +-sqrt(2n+1)) and polished by Newton with a
/// bisection fallback. Weights use
///   w_k = 2^{n-1} n! sqrt(pi) / (n^2 H_{n-1}(x_k)^2)
/// evaluated in log space.
template <typename T>
basic_hermite_rule<T> basic_hermite_roots_weights(int n) {
  if (n < 1 || n > 64) {
    throw param_error("hermite_roots_weights: n must be in [1, 64], got " +
                      std::to_string(n));
  }
  using std::abs;
  using std::sqrt;
  const T eps = std::numeric_limits<T>::epsilon();

  std::vector<T> previous;  // roots of H_{k-1}
  std::vector<T> current;
  for (int k = 1; k <= n; ++k) {
    const T edge = sqrt(T(2 * k + 1));
    current.assign(static_cast<std::size_t>(k), T(0));
    for (int j = 0; j < k; ++j) {
      T lo = (j == 0) ? -edge : previous[j - 1];
      T hi = (j == k - 1) ? edge : previous[j];
      T f_lo = scaled_hermite(k, lo).first;

      T x = T(0.5) * (lo + hi);
      bool converged = false;
      for (int iter = 0; iter < 200; ++iter) {
        const auto [f, f_prev] = scaled_hermite(k, x);
        if (f == T(0)) {
          converged = true;
          break;
        }
        if ((f < T(0)) == (f_lo < T(0))) {
          lo = x;
          f_lo = f;
        } else {
          hi = x;
        }
        const T df = sqrt(T(2 * k)) * f_prev - x * f;
        T next = x - f / df;
        if (!(next > lo && next < hi)) next = T(0.5) * (lo + hi);
        const T step = abs(next - x);
        x = next;
        if (step <= T(4) * eps * std::max(T(1), abs(x))) {
          converged = true;
          break;
        }
      }
      if (!converged || abs(scaled_hermite(k, x).first) > T(1e-10)) {
        throw convergence_error("hermite_roots_weights: root " + std::to_string(j + 1) +
                                " of H_" + std::to_string(k) + " did not converge");
      }
      current[j] = x;
    }
    previous.swap(current);
  }

  basic_hermite_rule<T> rule;
  rule.roots = std::move(previous);
  // Exact mirror symmetry; the middle root of odd n is exactly zero.
  for (int j = 0; j < n / 2; ++j) {
    const T a = T(0.5) * (rule.roots[n - 1 - j] - rule.roots[j]);
    rule.roots[j] = -a;
    rule.roots[n - 1 - j] = a;
  }
  if (n % 2 == 1) rule.roots[n / 2] = T(0);

  rule.weights.resize(rule.roots.size());
  using std::exp;
  using std::log;
  const T log_numer = T(n - 1) * log(T(2)) + detail::log_factorial<T>(n) +
                      T(0.5) * log(detail::pi_of<T>());
  for (int j = 0; j < n; ++j) {
    const T psi = scaled_hermite(n - 1, rule.roots[j]).first;
    const T log_h = log_abs_hermite(n - 1, rule.roots[j], psi);
    rule.weights[j] = exp(log_numer - T(2) * log(T(n)) - T(2) * log_h);
  }
  return rule;
}

inline hermite_rule hermite_roots_weights(int n) {
  return basic_hermite_roots_weights<double>(n);
}

}  // namespace vecfad

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

namespace vecfad::test {

inline double rel(double ref, double v) {
  return ref == 0.0 ? std::abs(v) : std::abs((v - ref) / ref);
}

/// Relative error in the complex modulus.
inline double rel(std::complex<double> ref, std::complex<double> v) {
  return std::abs(v - ref) / std::abs(ref);
}

/// Worst componentwise relative error; components of the reference with
/// modulus below `floor` are skipped.
inline double rel_componentwise(std::complex<double> ref, std::complex<double> v,
                                double floor = 1e-300) {
  double worst = 0.0;
  if (std::abs(ref.real()) >= floor) worst = std::max(worst, rel(ref.real(), v.real()));
  if (std::abs(ref.imag()) >= floor) worst = std::max(worst, rel(ref.imag(), v.imag()));
  return worst;
}

}  // namespace vecfad::test

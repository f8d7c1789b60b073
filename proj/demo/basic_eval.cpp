// Evaluates w(x + iy) along a short x vector at a few y values, including one
// below the real axis, and compares with the pointwise reference engine.

#include <cstdio>
#include <vector>

#include "vecfad/vecfad.hpp"

int main() {
  const std::vector<double> xs{0.0, 0.5, 1.0, 2.5, 5.0, 10.0, 100.0, 1000.0};
  for (double y : {1e-6, 0.1, 1.0, -0.5}) {
    const auto w = vecfad::evaluate(xs, y);
    std::printf("y = %g\n", y);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      vecfad::complex_value ref = vecfad::w_reference_full_plane({xs[i], y});
      std::printf("  x = %8g  w = % .12e %+.12e i   |rel diff| = %.2e\n", xs[i], w[i].real(),
                  w[i].imag(), std::abs((w[i] - ref) / ref));
    }
  }
}

// A three-line synthetic spectrum: superposed Voigt profiles on 2001
// frequencies, printed as nu,gV.

#include <cstdio>
#include <vector>

#include "vecfad/vecfad.hpp"

int main() {
  const std::vector<vecfad::line_record> lines{
      {1000.00, 0.050, 0.020, 1.0},
      {1000.40, 0.030, 0.020, 0.5},
      {1001.10, 0.080, 0.025, 2.0},
  };
  const auto nu = vecfad::linear_axis(998.0, 1003.0, 2001);
  const auto g = vecfad::superpose_profiles(lines, nu);
  std::printf("nu,gV\n");
  for (std::size_t i = 0; i < nu.size(); ++i) std::printf("%.6f,%.10e\n", nu[i], g[i]);
}

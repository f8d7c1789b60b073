#pragma once

// Non-equidistant abscissas for the single-domain interpolation and their
// complex ordinates at one fixed y.
//
// Half-line segments (num points each unless noted), mirrored about zero and
// deduplicated:
//
//   [0, 2.5]  [2.5, 5.5] (num + 100)  [5.5, 15]  [15, 100]
//   [100, 1000]  [1000, 10000]  [10000, bound]
//
// Defaults (bound 50000, num 100) give 1600 raw points and 1587 unique ones.

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "vecfad/errors.hpp"
#include "vecfad/reference_engine.hpp"

namespace vecfad {

struct grid_spec {
  double bound = 50000.0;
  int num = 100;
  /// Upper ends of extra half-line segments appended beyond bound, ascending.
  std::vector<double> extra_breaks{};

  /// Largest |x| covered by the grid.
  double reach() const { return extra_breaks.empty() ? bound : extra_breaks.back(); }
};

inline void validate(const grid_spec& spec) {
  if (!(spec.bound > 10000.0) || !std::isfinite(spec.bound)) {
    throw param_error("grid_spec: bound must be finite and exceed 10000");
  }
  if (spec.num < 4) throw param_error("grid_spec: num must be at least 4");
  double prev = spec.bound;
  for (double b : spec.extra_breaks) {
    if (!(b > prev) || !std::isfinite(b)) {
      throw param_error("grid_spec: extension breaks must increase past bound");
    }
    prev = b;
  }
}

struct grid_segment {
  double lo;
  double hi;
  int count;
};

/// Half-line segments in assembly order.
inline std::vector<grid_segment> grid_segments(const grid_spec& spec) {
  validate(spec);
  const int n = spec.num;
  std::vector<grid_segment> segs{{0.0, 2.5, n},       {2.5, 5.5, n + 100},
                                 {5.5, 15.0, n},      {15.0, 100.0, n},
                                 {100.0, 1000.0, n},  {1000.0, 10000.0, n},
                                 {10000.0, spec.bound, n}};
  double lo = spec.bound;
  for (double hi : spec.extra_breaks) {
    segs.push_back({lo, hi, n});
    lo = hi;
  }
  return segs;
}

/// count evenly spaced points from lo to hi, both endpoints bit-exact.
inline void append_linspace(std::vector<double>& out, double lo, double hi, int count) {
  const double step = (hi - lo) / (count - 1);
  for (int i = 0; i < count - 1; ++i) out.push_back(lo + i * step);
  out.push_back(hi);
}

/// Total raw points before deduplication (both halves).
inline std::size_t raw_abscissa_count(const grid_spec& spec) {
  std::size_t total = 0;
  for (const auto& s : grid_segments(spec)) total += static_cast<std::size_t>(s.count);
  return 2 * total;
}

inline std::vector<double> build_abscissas(const grid_spec& spec) {
  std::vector<double> half;
  for (const auto& s : grid_segments(spec)) append_linspace(half, s.lo, s.hi, s.count);

  std::vector<double> all;
  all.reserve(2 * half.size());
  for (auto it = half.rbegin(); it != half.rend(); ++it) all.push_back(-*it);
  all.insert(all.end(), half.begin(), half.end());

  std::sort(all.begin(), all.end());
  // -0.0 == 0.0, so the mirrored origin collapses here too.
  all.erase(std::unique(all.begin(), all.end()), all.end());
  for (double& v : all) {
    if (v == 0.0) v = 0.0;
  }
  return all;
}

/// Spec whose grid reaches new_bound: [reach, new_bound] is split into `bands`
/// equal-width segments of num points each. Existing abscissas are untouched.
inline grid_spec extend_bound(const grid_spec& spec, double new_bound, int bands = 3) {
  validate(spec);
  if (!(new_bound > spec.reach())) {
    throw param_error("extend_bound: new bound " + std::to_string(new_bound) +
                      " must exceed current reach " + std::to_string(spec.reach()));
  }
  if (bands < 1) throw param_error("extend_bound: bands must be positive");
  grid_spec out = spec;
  const double lo = spec.reach();
  const double width = (new_bound - lo) / bands;
  for (int k = 1; k < bands; ++k) out.extra_breaks.push_back(lo + k * width);
  out.extra_breaks.push_back(new_bound);
  return out;
}

/// One row of the band table: points with lo <= |x| < hi. The first band is
/// |x| < hi, the last is closed at hi.
struct band_count {
  double lo;
  double hi;
  std::size_t count;
  std::string label;
};

inline std::string format_break(double v) {
  std::string s = std::to_string(v);
  s.erase(s.find_last_not_of('0') + 1);
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

inline std::vector<band_count> band_counts(const grid_spec& spec,
                                           std::span<const double> abscissas) {
  const auto segs = grid_segments(spec);
  std::vector<band_count> out;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const bool first = (i == 0);
    const bool last = (i + 1 == segs.size());
    const double lo = segs[i].lo;
    const double hi = segs[i].hi;
    std::size_t n = 0;
    for (double v : abscissas) {
      const double a = std::abs(v);
      if (a >= lo && (a < hi || (last && a == hi))) ++n;
    }
    const std::string lo_s = format_break(lo);
    const std::string hi_s = format_break(hi);
    std::string label = first ? "|x|<" + hi_s
                              : lo_s + "<=|x|" + (last ? "<=" : "<") + hi_s;
    out.push_back({lo, hi, n, std::move(label)});
  }
  return out;
}

struct interpolation_grid {
  std::vector<double> abscissas;
  std::vector<complex_value> ordinates;
  double y = 0.0;
};

/// ordinates[i] = w(abscissas[i] + i y) from the reference engine.
inline interpolation_grid sample_ordinates(std::vector<double> abscissas, double y) {
  if (!(y >= 1e-8) || !std::isfinite(y)) {
    throw domain_error(domain_axis::y,
                       "sample_ordinates needs y >= 1e-8, got " + std::to_string(y));
  }
  interpolation_grid grid;
  grid.y = y;
  grid.ordinates.reserve(abscissas.size());
  const auto& coeffs = default_fadsamp();
  for (double x : abscissas) grid.ordinates.push_back(w_reference({x, y}, coeffs));
  grid.abscissas = std::move(abscissas);
  return grid;
}

}  // namespace vecfad

#pragma once

// Relative-error maps against the reference engine
//
//   dRe = |(K_ref - K) / K_ref|,   dIm = |(L_ref - L) / L_ref|
//
// over a linear x axis and a logarithmic y axis. Cells whose reference
// component has modulus below 1e-300 (notably L(0, y) = 0) are excluded: they
// hold 0, carry an exclusion flag and never contribute to the maxima.

#include <cmath>
#include <cstdint>
#include <functional>
#include <istream>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "vecfad/csv.hpp"
#include "vecfad/errors.hpp"
#include "vecfad/evaluator.hpp"
#include "vecfad/rational_baselines.hpp"
#include "vecfad/reference_engine.hpp"

namespace vecfad {

enum class error_method { interpolation, schreier_quotient, humlicek_sum, far_wing };

inline std::string to_string(error_method m) {
  switch (m) {
    case error_method::interpolation: return "interp";
    case error_method::schreier_quotient: return "quotient";
    case error_method::humlicek_sum: return "sum";
    case error_method::far_wing: return "farwing";
  }
  return "unknown";
}

inline constexpr double excluded_reference_floor = 1e-300;

struct map_extremum {
  double value = 0.0;
  double x = 0.0;
  double y = 0.0;
};

struct error_map {
  error_method method = error_method::interpolation;
  std::vector<double> x_axis;
  std::vector<double> y_axis;
  /// Row-major, one row per y value: index iy * x_axis.size() + ix.
  std::vector<double> d_re;
  std::vector<double> d_im;
  std::vector<std::uint8_t> excluded_re;
  std::vector<std::uint8_t> excluded_im;
  map_extremum max_re;
  map_extremum max_im;
  std::size_t excluded_re_count = 0;
  std::size_t excluded_im_count = 0;

  std::size_t nx() const { return x_axis.size(); }
  std::size_t ny() const { return y_axis.size(); }
  double re_at(std::size_t iy, std::size_t ix) const { return d_re[iy * nx() + ix]; }
  double im_at(std::size_t iy, std::size_t ix) const { return d_im[iy * nx() + ix]; }
};

inline std::vector<double> linear_axis(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) out[i] = lo + static_cast<double>(i) * step;
  out[n - 1] = hi;
  return out;
}

/// Logarithmically spaced, endpoints exact.
inline std::vector<double> log_axis(double lo, double hi, std::size_t n) {
  auto exps = linear_axis(std::log10(lo), std::log10(hi), n);
  for (double& e : exps) e = std::pow(10.0, e);
  exps.front() = lo;
  if (n > 1) exps.back() = hi;
  return exps;
}

/// Produces approximate w values for one y row.
using row_evaluator =
    std::function<std::vector<complex_value>(std::span<const double> xs, double y)>;

namespace detail {

inline double relative_component(double ref, double approx, bool& excluded) {
  if (std::abs(ref) < excluded_reference_floor) {
    excluded = true;
    return 0.0;
  }
  excluded = false;
  return std::abs((ref - approx) / ref);
}

}  // namespace detail

/// Error map over explicit axes.
inline error_map compute_error_map(std::span<const double> xs, std::span<const double> ys,
                                   const row_evaluator& approx,
                                   error_method method = error_method::interpolation) {
  if (xs.empty() || ys.empty()) throw shape_error("error map: empty axis");
  error_map map;
  map.method = method;
  map.x_axis.assign(xs.begin(), xs.end());
  map.y_axis.assign(ys.begin(), ys.end());
  const std::size_t nx = xs.size();
  map.d_re.assign(nx * ys.size(), 0.0);
  map.d_im.assign(nx * ys.size(), 0.0);
  map.excluded_re.assign(nx * ys.size(), 0);
  map.excluded_im.assign(nx * ys.size(), 0);

  const auto& coeffs = default_fadsamp();
  for (std::size_t iy = 0; iy < ys.size(); ++iy) {
    const double y = ys[iy];
    const auto row = approx(xs, y);
    if (row.size() != nx) throw shape_error("error map: evaluator returned a short row");
    for (std::size_t ix = 0; ix < nx; ++ix) {
      const complex_value ref = w_reference({xs[ix], y}, coeffs);
      const std::size_t k = iy * nx + ix;
      bool ex_re = false;
      bool ex_im = false;
      const double dre = detail::relative_component(ref.real(), row[ix].real(), ex_re);
      const double dim = detail::relative_component(ref.imag(), row[ix].imag(), ex_im);
      map.d_re[k] = dre;
      map.d_im[k] = dim;
      map.excluded_re[k] = ex_re;
      map.excluded_im[k] = ex_im;
      map.excluded_re_count += ex_re;
      map.excluded_im_count += ex_im;
      if (!ex_re && dre > map.max_re.value) map.max_re = {dre, xs[ix], y};
      if (!ex_im && dim > map.max_im.value) map.max_im = {dim, xs[ix], y};
    }
  }
  return map;
}

struct map_ranges {
  double x_lo = 1e-3;
  double x_hi = 15.0;
  std::size_t nx = 200;
  double y_lo = 1e-8;
  double y_hi = 1e-2;
  std::size_t ny = 200;
};

inline void validate(const map_ranges& r) {
  if (!(r.x_lo >= 0.0 && r.x_lo < r.x_hi)) {
    throw param_error("error map: need 0 <= x_lo < x_hi");
  }
  if (!(r.y_lo >= min_abs_y && r.y_lo < r.y_hi)) {
    throw param_error("error map: need 1e-8 <= y_lo < y_hi");
  }
  if (r.nx < 2 || r.ny < 2) throw param_error("error map: nx and ny must be at least 2");
}

/// Row evaluator for the single-domain interpolation (one evaluate call per row).
inline row_evaluator interpolation_rows(grid_spec spec = {}) {
  return [spec = std::move(spec)](std::span<const double> xs, double y) {
    return evaluate(xs, y, spec);
  };
}

/// Row evaluator for a rational baseline, pointwise. The Humlicek
/// parameters default to n = 20, delta = 1.55.
inline row_evaluator baseline_rows(error_method method, int n = 20, double delta = 1.55) {
  switch (method) {
    case error_method::interpolation:
      return interpolation_rows();
    case error_method::far_wing:
      return [](std::span<const double> xs, double y) {
        std::vector<complex_value> out;
        out.reserve(xs.size());
        for (double x : xs) out.push_back(far_wing_rational({x, y}));
        return out;
      };
    case error_method::humlicek_sum: {
      auto params = std::make_shared<const humlicek_params>(make_humlicek_params(n, delta));
      return [params](std::span<const double> xs, double y) {
        std::vector<complex_value> out;
        out.reserve(xs.size());
        for (double x : xs) out.push_back(humlicek_sum({x, y}, *params));
        return out;
      };
    }
    case error_method::schreier_quotient: {
      auto q = std::make_shared<const quotient_coefficients>(
          make_quotient_coefficients(make_humlicek_params(n, delta)));
      return [q](std::span<const double> xs, double y) {
        std::vector<complex_value> out;
        out.reserve(xs.size());
        for (double x : xs) out.push_back(schreier_two_domain({x, y}, *q));
        return out;
      };
    }
  }
  throw param_error("baseline_rows: unknown method");
}

/// Interpolation error map: linear x, logarithmic y.
inline error_map make_error_map(const map_ranges& r, const grid_spec& spec = {}) {
  validate(r);
  const auto xs = linear_axis(r.x_lo, r.x_hi, r.nx);
  const auto ys = log_axis(r.y_lo, r.y_hi, r.ny);
  return compute_error_map(xs, ys, interpolation_rows(spec), error_method::interpolation);
}

inline error_map make_baseline_error_map(error_method method, const map_ranges& r) {
  validate(r);
  const auto xs = linear_axis(r.x_lo, r.x_hi, r.nx);
  const auto ys = log_axis(r.y_lo, r.y_hi, r.ny);
  return compute_error_map(xs, ys, baseline_rows(method), method);
}

/// Long-form CSV: header x,y,dRe,dIm, one row per cell in row-major order.
/// Excluded components are written as empty fields.
inline void write_csv(std::ostream& os, const error_map& map) {
  os << "x,y,dRe,dIm\n";
  for (std::size_t iy = 0; iy < map.ny(); ++iy) {
    for (std::size_t ix = 0; ix < map.nx(); ++ix) {
      const std::size_t k = iy * map.nx() + ix;
      os << csv::format_exact(map.x_axis[ix]) << ',' << csv::format_exact(map.y_axis[iy])
         << ',';
      if (!map.excluded_re[k]) os << csv::format_exact(map.d_re[k]);
      os << ',';
      if (!map.excluded_im[k]) os << csv::format_exact(map.d_im[k]);
      os << '\n';
    }
  }
}

/// Inverse of write_csv. Axes are recovered from first appearances; the cell
/// order must be row-major as written. Maxima are recomputed.
inline error_map read_csv(std::istream& is) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(is, line)) throw parse_error(1, 1, "missing header");
  ++line_no;
  if (csv::trim(line) != "x,y,dRe,dIm") {
    throw parse_error(1, 1, "expected header 'x,y,dRe,dIm'");
  }
  struct cell {
    double x, y, re, im;
    bool ex_re, ex_im;
  };
  std::vector<cell> cells;
  while (std::getline(is, line)) {
    ++line_no;
    if (csv::trim(line).empty()) continue;
    const auto fields = csv::split(line);
    if (fields.size() != 4) {
      throw parse_error(line_no, 1, "expected 4 fields, got " + std::to_string(fields.size()));
    }
    cell c{};
    c.x = csv::parse_double(fields[0], line_no);
    c.y = csv::parse_double(fields[1], line_no);
    c.ex_re = csv::trim(fields[2].text).empty();
    c.ex_im = csv::trim(fields[3].text).empty();
    c.re = c.ex_re ? 0.0 : csv::parse_double(fields[2], line_no);
    c.im = c.ex_im ? 0.0 : csv::parse_double(fields[3], line_no);
    cells.push_back(c);
  }
  if (cells.empty()) throw parse_error(line_no, 1, "no data rows");

  error_map map;
  const double y0 = cells.front().y;
  for (const auto& c : cells) {
    if (c.y != y0) break;
    map.x_axis.push_back(c.x);
  }
  const std::size_t nx = map.x_axis.size();
  if (cells.size() % nx != 0) throw parse_error(line_no, 1, "ragged error map");
  for (std::size_t k = 0; k < cells.size(); k += nx) map.y_axis.push_back(cells[k].y);
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const auto& c = cells[k];
    if (c.x != map.x_axis[k % nx] || c.y != map.y_axis[k / nx]) {
      throw parse_error(k + 2, 1, "cell out of row-major order");
    }
    map.d_re.push_back(c.re);
    map.d_im.push_back(c.im);
    map.excluded_re.push_back(c.ex_re);
    map.excluded_im.push_back(c.ex_im);
    map.excluded_re_count += c.ex_re;
    map.excluded_im_count += c.ex_im;
    if (!c.ex_re && c.re > map.max_re.value) map.max_re = {c.re, c.x, c.y};
    if (!c.ex_im && c.im > map.max_im.value) map.max_im = {c.im, c.x, c.y};
  }
  return map;
}

}  // namespace vecfad

#pragma once

// Not-a-knot cubic spline over strictly increasing knots, templated on the
// ordinate type (double or std::complex<double>). The system matrix depends on
// the knots only, so a complex fit is two real fits sharing one elimination.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "vecfad/errors.hpp"

namespace vecfad {

enum class lookup_mode {
  binary_search,  // any query order
  sorted_sweep,   // queries ascending; one forward pass over the knots
};

namespace detail {

inline bool is_finite_value(double v) { return std::isfinite(v); }
inline bool is_finite_value(const std::complex<double>& v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

inline std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace detail

template <typename Value>
class cubic_spline {
public:
  /// On [knots[i], knots[i+1]]: c0 + c1 s + c2 s^2 + c3 s^3 with s = x - knots[i].
  struct piece {
    Value c0, c1, c2, c3;
  };

  cubic_spline() = default;

  /// Fits a not-a-knot spline: the third derivative is continuous across the
  /// second and the penultimate knot.
  static cubic_spline fit_not_a_knot(std::span<const double> knots,
                                     std::span<const Value> ordinates) {
    const std::size_t m = knots.size();
    if (m < 4) throw param_error("fit_not_a_knot: need at least 4 knots");
    if (ordinates.size() != m) {
      throw shape_error("fit_not_a_knot: knots and ordinates differ in length");
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (!std::isfinite(knots[i])) throw param_error("fit_not_a_knot: non-finite knot");
      if (i > 0 && !(knots[i] > knots[i - 1])) {
        throw param_error("fit_not_a_knot: knots not strictly increasing at index " +
                          std::to_string(i));
      }
      if (!detail::is_finite_value(ordinates[i])) {
        throw param_error("fit_not_a_knot: non-finite ordinate at index " +
                          std::to_string(i));
      }
    }

    std::vector<double> h(m - 1);
    std::vector<Value> slope(m - 1);
    for (std::size_t i = 0; i + 1 < m; ++i) {
      h[i] = knots[i + 1] - knots[i];
      slope[i] = (ordinates[i + 1] - ordinates[i]) / h[i];
    }

    // Unknowns: second derivatives M_1 .. M_{m-2}; M_0 and M_{m-1} are folded
    // in through the not-a-knot conditions.
    const std::size_t n = m - 2;
    std::vector<double> sub(n, 0.0);
    std::vector<double> diag(n, 0.0);
    std::vector<double> sup(n, 0.0);
    std::vector<Value> rhs(n);
    for (std::size_t r = 0; r < n; ++r) {
      const std::size_t i = r + 1;
      sub[r] = h[i - 1];
      diag[r] = 2.0 * (h[i - 1] + h[i]);
      sup[r] = h[i];
      rhs[r] = 6.0 * (slope[i] - slope[i - 1]);
    }
    {
      const double h0 = h[0];
      const double h1 = h[1];
      diag[0] += h0 * (h0 + h1) / h1;
      sup[0] -= h0 * h0 / h1;
    }
    {
      const double a = h[m - 3];
      const double b = h[m - 2];
      diag[n - 1] += b * (a + b) / a;
      sub[n - 1] -= b * b / a;
    }

    // Thomas elimination; the rows are diagonally dominant.
    for (std::size_t r = 1; r < n; ++r) {
      const double factor = sub[r] / diag[r - 1];
      diag[r] -= factor * sup[r - 1];
      rhs[r] -= factor * rhs[r - 1];
    }
    std::vector<Value> second(m);
    second[n] = rhs[n - 1] / diag[n - 1];
    for (std::size_t r = n - 1; r-- > 0;) {
      second[r + 1] = (rhs[r] - sup[r] * second[r + 2]) / diag[r];
    }
    second[0] = ((h[0] + h[1]) * second[1] - h[0] * second[2]) / h[1];
    {
      const double a = h[m - 3];
      const double b = h[m - 2];
      second[m - 1] = ((a + b) * second[m - 2] - b * second[m - 3]) / a;
    }

    cubic_spline s;
    s.knots_.assign(knots.begin(), knots.end());
    s.pieces_.resize(m - 1);
    for (std::size_t i = 0; i + 1 < m; ++i) {
      piece& p = s.pieces_[i];
      p.c0 = ordinates[i];
      p.c1 = slope[i] - h[i] * (2.0 * second[i] + second[i + 1]) / 6.0;
      p.c2 = second[i] / 2.0;
      p.c3 = (second[i + 1] - second[i]) / (6.0 * h[i]);
    }
    s.last_ = ordinates[m - 1];
    return s;
  }

  std::span<const double> knots() const { return knots_; }
  std::span<const piece> pieces() const { return pieces_; }
  double front() const { return knots_.front(); }
  double back() const { return knots_.back(); }

  /// Value at one query inside [front, back].
  Value operator()(double x) const {
    check_range(x);
    if (x == knots_.back()) return last_;
    return evaluate_piece(locate(x), x);
  }

  /// Values at many queries, output order matching input order. Throws
  /// range_error on the first query outside [front, back].
  void eval(std::span<const double> queries, std::span<Value> out,
            lookup_mode mode = lookup_mode::binary_search) const {
    if (out.size() != queries.size()) {
      throw shape_error("cubic_spline::eval: output span has the wrong length");
    }
    check_all(queries);
    if (mode == lookup_mode::sorted_sweep) {
      eval_sorted(queries, out);
    } else {
      eval_batched(queries, out);
    }
  }

  std::vector<Value> eval(std::span<const double> queries,
                          lookup_mode mode = lookup_mode::binary_search) const {
    std::vector<Value> out(queries.size());
    eval(queries, out, mode);
    return out;
  }

private:
  void check_range(double x) const {
    if (!(x >= knots_.front() && x <= knots_.back())) {
      throw range_error(x, "cubic_spline: query " + detail::format_double(x) +
                               " outside [" + detail::format_double(knots_.front()) +
                               ", " + detail::format_double(knots_.back()) + "]");
    }
  }

  // Branch-free pass first; the throwing scan only runs on failure.
  void check_all(std::span<const double> queries) const {
    const double lo = knots_.front();
    const double hi = knots_.back();
    bool ok = true;
    for (double q : queries) ok &= (q >= lo) & (q <= hi);
    if (!ok) {
      for (double q : queries) check_range(q);
    }
  }

  /// Index i with knots[i] <= x, i <= pieces - 1. Branch-free halving.
  std::size_t locate(double x) const {
    const double* base = knots_.data();
    std::size_t len = pieces_.size();
    while (len > 1) {
      const std::size_t half = len / 2;
      base = (base[half] <= x) ? base + half : base;
      len -= half;
    }
    return static_cast<std::size_t>(base - knots_.data());
  }

  Value evaluate_piece(std::size_t i, double x) const {
    const piece& p = pieces_[i];
    const double s = x - knots_[i];
    return p.c0 + s * (p.c1 + s * (p.c2 + s * p.c3));
  }

  // Several independent searches advance in lockstep so their load latencies
  // overlap.
  void eval_batched(std::span<const double> queries, std::span<Value> out) const {
    constexpr std::size_t lanes = 8;
    const std::size_t count = queries.size();
    const double* data = knots_.data();
    const std::size_t intervals = pieces_.size();
    std::size_t k = 0;
    for (; k + lanes <= count; k += lanes) {
      std::array<const double*, lanes> base;
      base.fill(data);
      std::size_t len = intervals;
      while (len > 1) {
        const std::size_t half = len / 2;
        for (std::size_t l = 0; l < lanes; ++l) {
          base[l] = (base[l][half] <= queries[k + l]) ? base[l] + half : base[l];
        }
        len -= half;
      }
      for (std::size_t l = 0; l < lanes; ++l) {
        const double x = queries[k + l];
        out[k + l] = (x == knots_.back())
                         ? last_
                         : evaluate_piece(static_cast<std::size_t>(base[l] - data), x);
      }
    }
    for (; k < count; ++k) {
      const double x = queries[k];
      out[k] = (x == knots_.back()) ? last_ : evaluate_piece(locate(x), x);
    }
  }

  void eval_sorted(std::span<const double> queries, std::span<Value> out) const {
    std::size_t i = 0;
    const std::size_t last_piece = pieces_.size() - 1;
    double prev = knots_.front();
    for (std::size_t k = 0; k < queries.size(); ++k) {
      const double x = queries[k];
      if (x < prev) {
        throw param_error("cubic_spline::eval: sorted_sweep needs ascending queries");
      }
      prev = x;
      while (i < last_piece && knots_[i + 1] <= x) ++i;
      out[k] = (x == knots_.back()) ? last_ : evaluate_piece(i, x);
    }
  }

  std::vector<double> knots_;
  std::vector<piece> pieces_;
  Value last_{};
};

}  // namespace vecfad

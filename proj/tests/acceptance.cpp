// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Tolerances and runtime limits are fixed here, not tuned.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "vecfad/quadrature_oracle.hpp"
#include "vecfad/vecfad.hpp"

#ifdef VECFAD_CLI_PATH
#include "cli_runner.hpp"
#endif

using namespace vecfad;

namespace {

using clock_type = std::chrono::steady_clock;

struct outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<outcome()>& body) {
  const auto t0 = clock_type::now();
  outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(clock_type::now() - t0).count();
  if (secs >= limit_s) {
    o.pass = false;
    o.detail += "; runtime limit exceeded";
  }
  if (!o.pass) ++failures;
  std::printf("[%s] %2d %s: %s (%.2f s, limit %.0f s)\n", o.pass ? "PASS" : "FAIL", id, name,
              o.detail.c_str(), secs, limit_s);
  std::fflush(stdout);
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double rel_modulus(complex_value ref, complex_value v) { return std::abs(v - ref) / std::abs(ref); }

double rel_componentwise(complex_value ref, complex_value v) {
  double worst = 0.0;
  if (std::abs(ref.real()) >= 1e-300) {
    worst = std::max(worst, std::abs((v.real() - ref.real()) / ref.real()));
  }
  if (std::abs(ref.imag()) >= 1e-300) {
    worst = std::max(worst, std::abs((v.imag() - ref.imag()) / ref.imag()));
  }
  return worst;
}

outcome grid_exactness() {
  const grid_spec spec;
  const auto xs = build_abscissas(spec);
  const auto bands = band_counts(spec, xs);
  const std::size_t expected[] = {197, 398, 198, 198, 198, 198, 200};
  bool ok = xs.size() == 1587 && bands.size() == 7;
  std::string counts;
  for (std::size_t i = 0; i < bands.size(); ++i) {
    counts += (i ? "/" : "") + std::to_string(bands[i].count);
    if (i < 7) ok = ok && bands[i].count == expected[i];
  }
  return {ok, "total " + std::to_string(xs.size()) + ", bands " + counts};
}

outcome reference_fidelity() {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto log_uniform = [&](double lo, double hi) {
    return lo * std::pow(hi / lo, u(rng));
  };
  struct region {
    const char* name;
    reference_branch branch;
    double worst = 0.0;
    int count = 0;
  };
  region regions[] = {{"omega", reference_branch::omega_sum},
                      {"transformed", reference_branch::transformed_sum},
                      {"cf", reference_branch::continued_fraction}};
  const auto& coeffs = default_fadsamp();

  auto check = [&](region& r, complex_value z) {
    if (reference_dispatch(z) != r.branch) return;
    const auto ref = quadrature_oracle(z.real(), z.imag());
    r.worst = std::max(r.worst, rel_componentwise(ref, w_reference(z, coeffs)));
    ++r.count;
  };
  while (regions[0].count < 200) {
    const double rad = 8.0 * std::sqrt(u(rng));
    const double t = std::numbers::pi * u(rng);
    check(regions[0], std::polar(rad, t));
  }
  while (regions[1].count < 200) {
    const double x = (u(rng) < 0.5 ? -1.0 : 1.0) * 8.0 * u(rng);
    const double y_hi = 0.05 * std::abs(x);
    if (y_hi <= 1e-8) continue;
    check(regions[1], {x, log_uniform(1e-8, y_hi)});
  }
  while (regions[2].count < 200) {
    const double rad = 8.0 + 32.0 * u(rng);
    const double y = log_uniform(1e-8, rad);
    const double x = (u(rng) < 0.5 ? -1.0 : 1.0) * std::sqrt(rad * rad - y * y);
    check(regions[2], {x, y});
  }

  double anchor = std::abs(w_reference({0.0, 0.0}) - complex_value{1.0, 0.0});
  for (double x : {0.0, 0.5, 1.0, 2.0, 4.0, 6.0}) {
    const double k = std::exp(-x * x);
    anchor = std::max(anchor, std::abs(w_reference({x, 0.0}).real() - k) / k);
  }
  for (double y : {1e-6, 0.1, 1.0, 3.0, 7.5, 20.0}) {
    const double v = std::exp(y * y) * std::erfc(y);
    anchor = std::max(anchor, rel_componentwise({v, 0.0}, w_reference({0.0, y})));
  }
  double worst = anchor;
  std::string detail;
  for (const auto& r : regions) {
    worst = std::max(worst, r.worst);
    detail += std::string(r.name) + " " + fmt("%.2e", r.worst) + ", ";
  }
  detail += "anchors " + fmt("%.2e", anchor) + " (limit 1e-11)";
  return {worst <= 1e-11, detail};
}

outcome accuracy_band(double y_lo, double y_hi, double re_lo, double re_hi, double im_hi) {
  const auto map = make_error_map({1e-3, 15.0, 200, y_lo, y_hi, 200});
  const bool ok = map.max_re.value >= re_lo && map.max_re.value <= re_hi &&
                  map.max_im.value <= im_hi;
  std::string detail = "max_dRe " + fmt("%.4e", map.max_re.value) + " at (" +
                       fmt("%.4g", map.max_re.x) + ", " + fmt("%.3g", map.max_re.y) + ")";
  detail += re_lo > 0.0 ? " need [" + fmt("%.1e", re_lo) + ", " + fmt("%.1e", re_hi) + "]"
                        : " need <= " + fmt("%.1e", re_hi);
  detail += ", max_dIm " + fmt("%.4e", map.max_im.value) + " need <= " + fmt("%.1e", im_hi);
  return {ok, detail};
}

outcome accuracy_cliff() {
  const auto q = make_quotient_coefficients(make_humlicek_params(20, 1.55));
  const auto xs = linear_axis(0.0, 15.0, 1501);
  auto worst_on = [&](double y) {
    const std::vector<double> ys{y};
    const auto m = compute_error_map(xs, ys, baseline_rows(error_method::schreier_quotient),
                                     error_method::schreier_quotient);
    return std::max(m.max_re.value, m.max_im.value);
  };
  // Same row restricted to the quotient branch (x + y <= 15), for diagnosis only.
  auto worst_quotient_only = [&](double y) {
    double worst = 0.0;
    for (double x : xs) {
      if (x + y > 15.0) continue;
      const auto ref = w_reference({x, y});
      const auto v = quotient_eval({x, y}, q);
      worst = std::max(worst, std::abs((ref.real() - v.real()) / ref.real()));
      if (ref.imag() != 0.0) {
        worst = std::max(worst, std::abs((ref.imag() - v.imag()) / ref.imag()));
      }
    }
    return worst;
  };
  const double e6 = worst_on(1e-6);
  const double e8 = worst_on(1e-8);
  return {e6 <= 1e-6 && e8 > 1e-6,
          "y=1e-6: " + fmt("%.3e", e6) + " (need <= 1e-6), y=1e-8: " + fmt("%.3e", e8) +
              " (need > 1e-6); quotient branch only: y=1e-6 " +
              fmt("%.3e", worst_quotient_only(1e-6)) + ", y=1e-8 " +
              fmt("%.3e", worst_quotient_only(1e-8))};
}

outcome algebraic_equivalence() {
  const auto p = make_humlicek_params(20, 1.55);
  const auto q = make_quotient_coefficients(p);
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto sample = [&](double y_min) {
    while (true) {
      const double x = -15.0 + 30.0 * u(rng);
      const double y = y_min + (15.0 - y_min) * u(rng);
      if (std::abs(x) + y <= 15.0) return complex_value{x, y};
    }
  };
  double half_full = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto z = sample(0.0);
    half_full = std::max(half_full, rel_modulus(humlicek_full_sum(z, p), humlicek_sum(z, p)));
  }
  double quot = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto z = sample(0.1);
    quot = std::max(quot, rel_modulus(humlicek_sum(z, p), quotient_eval(z, q)));
  }
  double kuntz = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double x = -100.0 + 200.0 * u(rng);
    const double y = 50.0 * u(rng);
    const double fw = far_wing_rational({x, y}).real();
    kuntz = std::max(kuntz, std::abs(kuntz_real(x, y) - fw) / std::abs(fw));
  }
  const bool ok = half_full <= 1e-14 && quot <= 1e-9 && kuntz <= 1e-13;
  return {ok, "half/full " + fmt("%.2e", half_full) + " (1e-14), quotient/sum " +
                  fmt("%.2e", quot) + " (1e-9), kuntz/farwing " + fmt("%.2e", kuntz) +
                  " (1e-13)"};
}

outcome interpolation_properties() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> step(0.1, 2.0);
  std::vector<double> knots{-5.0};
  for (int i = 1; i < 60; ++i) knots.push_back(knots.back() + step(rng));
  auto f = [](double x) { return complex_value{1.0 - 2.0 * x + 0.3 * x * x * x, 0.5 * x * x}; };
  std::vector<complex_value> vals;
  for (double x : knots) vals.push_back(f(x));
  const auto s = cubic_spline<complex_value>::fit_not_a_knot(knots, vals);
  std::uniform_real_distribution<double> uq(knots.front(), knots.back());
  double cubic = 0.0;
  for (int i = 0; i < 5000; ++i) {
    const double x = uq(rng);
    cubic = std::max(cubic, std::abs(s(x) - f(x)) / std::max(1.0, std::abs(f(x))));
  }

  const auto xs = build_abscissas({});
  double knot = 0.0;
  for (double y : {1e-8, 1e-5, 0.1, 5.0}) {
    const auto w = evaluate(xs, y);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      knot = std::max(knot, rel_modulus(w_reference({xs[i], y}), w[i]));
    }
  }

  std::uniform_real_distribution<double> ux(0.0, 15.0);
  std::vector<double> pos(1000);
  for (double& x : pos) x = ux(rng);
  std::vector<double> neg(pos.size());
  for (std::size_t i = 0; i < pos.size(); ++i) neg[i] = -pos[i];
  double parity = 0.0;
  for (double y : {1e-8, 1e-3, 1.0}) {
    const auto a = evaluate(pos, y);
    const auto b = evaluate(neg, y);
    for (std::size_t i = 0; i < pos.size(); ++i) {
      parity = std::max(parity, std::abs(a[i].real() - b[i].real()) / std::abs(a[i].real()));
      parity = std::max(parity, std::abs(a[i].imag() + b[i].imag()) / std::abs(a[i].imag()));
    }
  }
  const bool ok = cubic <= 1e-10 && knot <= 1e-14 && parity <= 1e-13;
  return {ok, "cubic " + fmt("%.2e", cubic) + " (1e-10), at abscissas " + fmt("%.2e", knot) +
                  " (1e-14), parity " + fmt("%.2e", parity) + " (1e-13)"};
}

outcome lower_half_plane() {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> ux(-6.0, 6.0);
  const double ys[] = {-1e-8, -1e-5, -1e-3, -0.05, -0.2, -0.5, -1.0, -1.5, -2.0, -3.0};
  double interp = 0.0;
  double identity = 0.0;
  int points = 0;
  for (double y : ys) {
    std::vector<double> xs(50);
    for (double& x : xs) x = ux(rng);
    const auto w = evaluate(xs, y);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const complex_value z{xs[i], y};
      const complex_value formula =
          2.0 * std::exp(-z * z) - std::conj(w_reference(std::conj(z)));
      interp = std::max(interp, rel_modulus(formula, w[i]));
      const auto oracle = quadrature_oracle(xs[i], y);
      identity = std::max(identity, rel_modulus(oracle, formula));
      ++points;
    }
  }
  const bool ok = points == 500 && interp <= 1.5e-6 && identity <= 1e-12;
  return {ok, std::to_string(points) + " points: evaluate vs identity " + fmt("%.2e", interp) +
                  " (1.5e-6), identity vs quadrature " + fmt("%.2e", identity) + " (1e-12)"};
}

outcome performance() {
  bench_config cfg;
  cfg.count = 10'000'000;
  cfg.x_max = 15.0;
  cfg.y = 1e-5;
  cfg.seed = 1;
  const auto r = run_bench(cfg);
  const bool same_inputs = bench_inputs(100'000, 15.0, 1) == bench_inputs(100'000, 15.0, 1);
  bench_config small = cfg;
  small.count = 50'000;
  const auto a = run_bench(small);
  const auto b = run_bench(small);
  const bool deterministic = same_inputs && a.checksum_interp == b.checksum_interp &&
                             a.checksum_reference == b.checksum_reference;
  const bool ok = r.speedup >= 5.0 && r.elapsed_interp.count() < 10.0 && deterministic;
  return {ok, "1e7 points in " + fmt("%.3f", r.elapsed_interp.count()) + " s, reference " +
                  fmt("%.3f", r.elapsed_reference.count()) + " s (1/100 subsample x100), speedup " +
                  fmt("%.2f", r.speedup) + " (need >= 5), deterministic " +
                  (deterministic ? "yes" : "no")};
}

#ifdef VECFAD_CLI_PATH
outcome cli_contract() {
  using vecfad::test::run_cli;
  using vecfad::test::slurp;
  using vecfad::test::temp_path;
  std::vector<std::string> problems;
  auto expect = [&](bool cond, const std::string& what) {
    if (!cond) problems.push_back(what);
  };

  const auto grid = run_cli("grid-info");
  expect(grid.exit_code == 0 && grid.out.rfind("band,count\n", 0) == 0 &&
             grid.out.find("total,1587\n") != std::string::npos,
         "grid-info");

  const auto ev = run_cli("eval --x 0 --y 1");
  expect(ev.exit_code == 0 && ev.out == "x,re,im\n0,0.427584,0\n", "eval default digits");

  const std::string out = temp_path("acc_eval.csv");
  const auto ev2 = run_cli("eval --x=-2,0.5,7 --y 0.3 --digits 17 --out '" + out + "'");
  {
    std::istringstream in(slurp(out));
    std::string line;
    std::getline(in, line);
    bool ok = ev2.exit_code == 0 && line == "x,re,im";
    const std::vector<double> xs{-2.0, 0.5, 7.0};
    const auto w = evaluate(xs, 0.3);
    for (std::size_t i = 0; ok && i < xs.size(); ++i) {
      ok = static_cast<bool>(std::getline(in, line));
      const auto f = csv::split(line);
      ok = ok && f.size() == 3 && csv::parse_double(f[0], i + 2) == xs[i] &&
           csv::parse_double(f[1], i + 2) == w[i].real() &&
           csv::parse_double(f[2], i + 2) == w[i].imag();
    }
    expect(ok, "eval csv round trip");
  }

  const std::string map_path = temp_path("acc_errmap.csv");
  const auto em = run_cli("errmap --xlo 1e-3 --xhi 15 --nx 12 --ylo 1e-8 --yhi 1e-2 --ny 4 --out '" +
                          map_path + "'");
  {
    std::ifstream in(map_path);
    const auto parsed = read_csv(in);
    const auto direct = make_error_map({1e-3, 15.0, 12, 1e-8, 1e-2, 4});
    expect(em.exit_code == 0 && parsed.d_re == direct.d_re && parsed.d_im == direct.d_im,
           "errmap csv round trip");
  }

  const auto bench = run_cli("bench --count 20000 --seed 9");
  expect(bench.exit_code == 0 && bench.out.find("speedup,") != std::string::npos, "bench");

  const std::string lines = temp_path("acc_lines.csv");
  const std::string prof = temp_path("acc_profile.csv");
  {
    std::ofstream f(lines);
    f << "nu0,alphaL,alphaD,strength\n2000.0,0.04,0.01,1.0\n";
  }
  const auto pr = run_cli("profile --lines '" + lines + "' --numin 1999.5 --numax 2000.5 --steps 11 --out '" +
                          prof + "'");
  {
    std::istringstream in(slurp(prof));
    std::string line;
    std::getline(in, line);
    bool ok = pr.exit_code == 0 && line == "nu,gV";
    const auto nu = linear_axis(1999.5, 2000.5, 11);
    const auto g = voigt_profile(nu, 2000.0, 0.04, 0.01);
    for (std::size_t i = 0; ok && i < nu.size(); ++i) {
      ok = static_cast<bool>(std::getline(in, line));
      const auto f = csv::split(line);
      ok = ok && f.size() == 2 && csv::parse_double(f[1], i + 2) == g[i];
    }
    expect(ok, "profile csv round trip");
  }

  const auto dom_y = run_cli("eval --x 1 --y 1e-9");
  expect(dom_y.exit_code == 2 && dom_y.out.find("beyond HITRAN range") != std::string::npos,
         "domain error y");
  const auto dom_x = run_cli("eval --x 60000 --y 1");
  expect(dom_x.exit_code == 2 && dom_x.out.find("beyond HITRAN range") != std::string::npos,
         "domain error x");
  expect(run_cli("eval --x 1,zz --y 1").exit_code == 3, "parse error exit 3");

  std::string detail = "grid-info, eval, errmap, bench, profile, exit codes";
  if (!problems.empty()) {
    detail = "failed:";
    for (const auto& p : problems) detail += " [" + p + "]";
  }
  return {problems.empty(), detail};
}
#endif

}  // namespace

int main() {
  criterion(1, "grid exactness", 1.0, grid_exactness);
  criterion(2, "reference engine vs quadrature oracle", 120.0, reference_fidelity);
  criterion(3, "accuracy band, y in [1e-8, 1e-2]", 300.0,
            [] { return accuracy_band(1e-8, 1e-2, 5e-7, 1.5e-6, 2e-7); });
  {
    // Supplementary, not a criterion: the same region on a finer x axis.
    const auto fine = make_error_map({1e-3, 15.0, 2000, 1e-8, 1e-2, 200});
    std::printf("[INFO]    small-y map at 2000x200: max_dRe %.4e at (%.4g, %.3g), max_dIm %.4e\n",
                fine.max_re.value, fine.max_re.x, fine.max_re.y, fine.max_im.value);
  }
  criterion(4, "accuracy band, y in [1e-2, 15]", 300.0,
            [] { return accuracy_band(1e-2, 15.0, 0.0, 5e-7, 2e-7); });
  criterion(5, "Schreier quotient accuracy cliff", 60.0, accuracy_cliff);
  criterion(6, "algebraic equivalences", 30.0, algebraic_equivalence);
  criterion(7, "interpolation properties", 60.0, interpolation_properties);
  criterion(8, "lower half-plane reflection", 60.0, lower_half_plane);
  criterion(9, "throughput vs pointwise reference", 60.0, performance);
  {
    bench_config wide;
    wide.x_max = 50000.0;
    const auto r = run_bench(wide);
    std::printf("[INFO]    1e7 points on [0, 50000]: %.3f s, throughput %.3e points/s, speedup %.2f\n",
                r.elapsed_interp.count(), r.throughput, r.speedup);
  }
#ifdef VECFAD_CLI_PATH
  criterion(10, "command-line contract", 30.0, cli_contract);
#else
  criterion(10, "command-line contract", 30.0,
            [] { return outcome{false, "CLI not built (VECFAD_BUILD_TOOLS=OFF)"}; });
#endif
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

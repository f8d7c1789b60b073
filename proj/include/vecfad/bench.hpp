#pragma once

// Throughput comparison: one vectorized evaluate call over `count` uniform
// random x in [0, x_max] at fixed y, against per-point reference evaluation.
// The reference side is timed on every `subsample`-th point and scaled up.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "vecfad/errors.hpp"
#include "vecfad/evaluator.hpp"
#include "vecfad/reference_engine.hpp"

namespace vecfad {

struct bench_config {
  std::size_t count = 10'000'000;
  double x_max = 15.0;
  double y = 1e-5;
  std::uint64_t seed = 1;
  std::size_t subsample = 100;
  /// Threads for an additional, separately reported parallel run; 0 skips it.
  unsigned parallel_threads = 0;
  grid_spec spec{};
};

struct bench_report {
  std::size_t count = 0;
  double x_max = 0.0;
  double y = 0.0;
  std::uint64_t seed = 0;
  std::string rng = "std::mt19937_64 + std::uniform_real_distribution<double>";
  std::size_t reference_points = 0;  // points actually timed on the reference side
  double extrapolation = 0.0;        // count / reference_points
  std::chrono::duration<double> elapsed_interp{};
  std::chrono::duration<double> elapsed_reference{};  // extrapolated to count
  std::chrono::duration<double> elapsed_parallel{};   // zero unless requested
  unsigned parallel_threads = 0;
  double speedup = 0.0;     // elapsed_reference / elapsed_interp
  double throughput = 0.0;  // interpolated points per second
  double checksum_interp = 0.0;
  double checksum_reference = 0.0;
};

/// Uniform x in [0, x_max], deterministic for a given seed.
inline std::vector<double> bench_inputs(std::size_t count, double x_max, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  std::uniform_real_distribution<double> dist(0.0, x_max);
  std::vector<double> xs(count);
  for (double& x : xs) x = dist(engine);
  return xs;
}

inline bench_report run_bench(const bench_config& cfg) {
  if (cfg.count < 10'000) throw param_error("run_bench: count must be at least 1e4");
  if (!(cfg.y >= min_abs_y)) throw param_error("run_bench: y must be at least 1e-8");
  if (!(cfg.x_max > 0.0 && cfg.x_max <= cfg.spec.reach())) {
    throw param_error("run_bench: x_max must lie in (0, bound]");
  }
  if (cfg.subsample < 1 || cfg.subsample > cfg.count) {
    throw param_error("run_bench: subsample stride out of range");
  }
  using clock = std::chrono::steady_clock;

  bench_report rep;
  rep.count = cfg.count;
  rep.x_max = cfg.x_max;
  rep.y = cfg.y;
  rep.seed = cfg.seed;

  const auto xs = bench_inputs(cfg.count, cfg.x_max, cfg.seed);

  auto t0 = clock::now();
  const auto values = evaluate(xs, cfg.y, cfg.spec);
  auto t1 = clock::now();
  rep.elapsed_interp = t1 - t0;
  for (const auto& v : values) rep.checksum_interp += v.real() + v.imag();

  std::vector<double> sample;
  sample.reserve(cfg.count / cfg.subsample + 1);
  for (std::size_t i = 0; i < cfg.count; i += cfg.subsample) sample.push_back(xs[i]);
  std::vector<complex_value> ref(sample.size());
  const auto& coeffs = default_fadsamp();
  t0 = clock::now();
  for (std::size_t i = 0; i < sample.size(); ++i) {
    ref[i] = w_reference({sample[i], cfg.y}, coeffs);
  }
  t1 = clock::now();
  for (const auto& v : ref) rep.checksum_reference += v.real() + v.imag();
  rep.reference_points = sample.size();
  rep.extrapolation = static_cast<double>(cfg.count) / static_cast<double>(sample.size());
  rep.elapsed_reference = (t1 - t0) * rep.extrapolation;

  if (cfg.parallel_threads > 0) {
    eval_options opt;
    opt.threads = cfg.parallel_threads;
    t0 = clock::now();
    const auto par = evaluate(xs, cfg.y, cfg.spec, opt);
    t1 = clock::now();
    rep.elapsed_parallel = t1 - t0;
    rep.parallel_threads = cfg.parallel_threads;
  }

  rep.speedup = rep.elapsed_reference.count() / rep.elapsed_interp.count();
  rep.throughput = static_cast<double>(cfg.count) / rep.elapsed_interp.count();
  return rep;
}

}  // namespace vecfad

// vecfad command-line tool.
//
// Exit status: 0 success, 2 input outside the working domain or an invalid
// parameter value, 3 malformed input (command line, CSV, number syntax),
// 1 anything else (I/O failures).

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vecfad/vecfad.hpp"

namespace {

namespace csv = vecfad::csv;

class io_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// --out target, or stdout when empty.
class output {
public:
  explicit output(const std::string& path) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw io_error("cannot open '" + path + "' for writing");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void finish() {
    stream().flush();
    if (!stream()) throw io_error("write failed");
  }

private:
  std::unique_ptr<std::ofstream> file_;
};

/// Numbers separated by commas, blanks or newlines. A leading non-numeric
/// line is taken as a header and skipped.
std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::istringstream lines(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    std::string flat = line;
    for (char& c : flat) {
      if (c == ' ' || c == '\t' || c == ';') c = ',';
    }
    for (const auto& f : csv::split(flat)) {
      if (csv::trim(f.text).empty()) continue;
      const bool header = out.empty() && line_no == 1 &&
                          std::isalpha(static_cast<unsigned char>(csv::trim(f.text)[0]));
      if (header) break;
      out.push_back(csv::parse_double(f, line_no));
    }
  }
  if (out.empty()) throw vecfad::parse_error(line_no, 1, "no x values given");
  return out;
}

std::vector<double> read_x_argument(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    if (!in) throw io_error("cannot open '" + arg + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_number_list(buf.str());
  }
  return parse_number_list(arg);
}

struct eval_args {
  std::string x;
  double y = 0.0;
  std::string part = "complex";
  int digits = 6;
  std::string out;
};

void run_eval(const eval_args& a) {
  const auto xs = read_x_argument(a.x);
  vecfad::part_selection part = vecfad::part_selection::complex;
  if (a.part == "real") part = vecfad::part_selection::real;
  if (a.part == "imag") part = vecfad::part_selection::imag;
  const auto res = vecfad::evaluate(vecfad::eval_request{xs, a.y, part});

  output out(a.out);
  auto& os = out.stream();
  switch (part) {
    case vecfad::part_selection::complex: os << "x,re,im\n"; break;
    case vecfad::part_selection::real: os << "x,re\n"; break;
    case vecfad::part_selection::imag: os << "x,im\n"; break;
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    os << csv::format_digits(xs[i], 17) << ',';
    if (part == vecfad::part_selection::complex) {
      os << csv::format_digits(res.values[i].real(), a.digits) << ','
         << csv::format_digits(res.values[i].imag(), a.digits) << '\n';
    } else {
      os << csv::format_digits(res.components[i], a.digits) << '\n';
    }
  }
  out.finish();
}

struct errmap_args {
  vecfad::map_ranges ranges;
  std::string method = "interp";
  std::string out;
};

void run_errmap(const errmap_args& a) {
  vecfad::error_method method = vecfad::error_method::interpolation;
  if (a.method == "quotient") method = vecfad::error_method::schreier_quotient;
  if (a.method == "sum") method = vecfad::error_method::humlicek_sum;
  if (a.method == "farwing") method = vecfad::error_method::far_wing;

  const auto map = method == vecfad::error_method::interpolation
                       ? vecfad::make_error_map(a.ranges)
                       : vecfad::make_baseline_error_map(method, a.ranges);
  {
    output out(a.out);
    vecfad::write_csv(out.stream(), map);
    out.finish();
  }
  // Summary goes to stderr when the map itself occupies stdout.
  std::ostream& log = a.out.empty() ? std::cerr : std::cout;
  log << "method," << vecfad::to_string(map.method) << '\n'
      << "max_dRe," << csv::format_exact(map.max_re.value) << '\n'
      << "max_dRe_x," << csv::format_exact(map.max_re.x) << '\n'
      << "max_dRe_y," << csv::format_exact(map.max_re.y) << '\n'
      << "max_dIm," << csv::format_exact(map.max_im.value) << '\n'
      << "max_dIm_x," << csv::format_exact(map.max_im.x) << '\n'
      << "max_dIm_y," << csv::format_exact(map.max_im.y) << '\n'
      << "excluded_re," << map.excluded_re_count << '\n'
      << "excluded_im," << map.excluded_im_count << '\n';
}

void print_bench(const vecfad::bench_config& cfg) {
  const auto r = vecfad::run_bench(cfg);
  auto& os = std::cout;
  os << "key,value\n"
     << "count," << r.count << '\n'
     << "x_max," << csv::format_exact(r.x_max) << '\n'
     << "y," << csv::format_exact(r.y) << '\n'
     << "seed," << r.seed << '\n'
     << "rng," << r.rng << '\n'
     << "reference_points," << r.reference_points << '\n'
     << "reference_extrapolation," << csv::format_digits(r.extrapolation, 6) << '\n'
     << "elapsed_interp_s," << csv::format_digits(r.elapsed_interp.count(), 6) << '\n'
     << "elapsed_reference_s," << csv::format_digits(r.elapsed_reference.count(), 6) << '\n'
     << "speedup," << csv::format_digits(r.speedup, 6) << '\n'
     << "throughput_per_s," << csv::format_digits(r.throughput, 6) << '\n'
     << "checksum_interp," << csv::format_exact(r.checksum_interp) << '\n'
     << "checksum_reference," << csv::format_exact(r.checksum_reference) << '\n';
  if (r.parallel_threads > 0) {
    os << "parallel_threads," << r.parallel_threads << '\n'
       << "elapsed_parallel_s," << csv::format_digits(r.elapsed_parallel.count(), 6) << '\n';
  }
}

void run_grid_info(const vecfad::grid_spec& spec) {
  const auto xs = vecfad::build_abscissas(spec);
  std::cout << "band,count\n";
  for (const auto& b : vecfad::band_counts(spec, xs)) {
    std::cout << b.label << ',' << b.count << '\n';
  }
  std::cout << "total," << xs.size() << '\n';
}

struct profile_args {
  std::string lines;
  double nu_min = 0.0;
  double nu_max = 0.0;
  int steps = 0;
  std::string out;
};

void run_profile(const profile_args& a) {
  if (!(a.nu_max > a.nu_min)) throw vecfad::param_error("profile: need numin < numax");
  if (a.steps < 2) throw vecfad::param_error("profile: steps must be at least 2");
  std::error_code ec;
  if (!std::filesystem::is_regular_file(a.lines, ec)) {
    throw io_error("line list '" + a.lines + "' not found");
  }
  const auto lines = vecfad::ingest_lines(a.lines);
  const auto nu = vecfad::linear_axis(a.nu_min, a.nu_max, static_cast<std::size_t>(a.steps));
  const auto g = vecfad::superpose_profiles(lines, nu);
  output out(a.out);
  out.stream() << "nu,gV\n";
  for (std::size_t i = 0; i < nu.size(); ++i) {
    out.stream() << csv::format_exact(nu[i]) << ',' << csv::format_exact(g[i]) << '\n';
  }
  out.finish();
}

int fail(int code, const std::string& what) {
  std::string line = what;
  for (char& c : line) {
    if (c == '\n') c = ' ';
  }
  std::cerr << "vecfad: error: " << line << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Faddeeva / Voigt function evaluation by single-domain interpolation"};
  app.require_subcommand(1);

  eval_args ea;
  auto* eval = app.add_subcommand("eval", "Evaluate w(x + iy) for many x at one y");
  eval->add_option("--x", ea.x, "Comma-separated x values, or a file of them")->required();
  eval->add_option("--y", ea.y, "Scalar y, |y| >= 1e-8")->required();
  eval->add_option("--part", ea.part, "real, imag or complex")
      ->check(CLI::IsMember({"real", "imag", "complex"}))
      ->capture_default_str();
  eval->add_option("--digits", ea.digits, "Significant digits of the output values")
      ->check(CLI::Range(1, 17))
      ->capture_default_str();
  eval->add_option("--out", ea.out, "CSV output file (default stdout)");

  errmap_args ma;
  auto* errmap = app.add_subcommand("errmap", "Relative-error map against the reference engine");
  errmap->add_option("--xlo", ma.ranges.x_lo)->capture_default_str();
  errmap->add_option("--xhi", ma.ranges.x_hi)->capture_default_str();
  errmap->add_option("--nx", ma.ranges.nx)->capture_default_str();
  errmap->add_option("--ylo", ma.ranges.y_lo)->capture_default_str();
  errmap->add_option("--yhi", ma.ranges.y_hi)->capture_default_str();
  errmap->add_option("--ny", ma.ranges.ny)->capture_default_str();
  errmap->add_option("--method", ma.method, "interp, quotient, sum or farwing")
      ->check(CLI::IsMember({"interp", "quotient", "sum", "farwing"}))
      ->capture_default_str();
  errmap->add_option("--out", ma.out, "CSV output file (default stdout)");

  vecfad::bench_config bc;
  auto* bench = app.add_subcommand("bench", "Throughput against per-point reference evaluation");
  bench->add_option("--count", bc.count)->capture_default_str();
  bench->add_option("--xmax", bc.x_max)->capture_default_str();
  bench->add_option("--y", bc.y)->capture_default_str();
  bench->add_option("--seed", bc.seed)->capture_default_str();
  bench->add_option("--subsample", bc.subsample, "Reference timing stride")->capture_default_str();
  bench->add_option("--threads", bc.parallel_threads, "Extra parallel run; 0 skips it")
      ->capture_default_str();

  vecfad::grid_spec gs;
  auto* grid = app.add_subcommand("grid-info", "Interpolation grid point counts per band");
  grid->add_option("--bound", gs.bound)->capture_default_str();
  grid->add_option("--num", gs.num)->capture_default_str();

  profile_args pa;
  auto* profile = app.add_subcommand("profile", "Superposed Voigt spectrum of a line list");
  profile->add_option("--lines", pa.lines, "CSV with header nu0,alphaL,alphaD,strength")
      ->required();
  profile->add_option("--numin", pa.nu_min)->required();
  profile->add_option("--numax", pa.nu_max)->required();
  profile->add_option("--steps", pa.steps)->required();
  profile->add_option("--out", pa.out, "CSV output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  try {
    if (*eval) run_eval(ea);
    if (*errmap) run_errmap(ma);
    if (*bench) print_bench(bc);
    if (*grid) run_grid_info(gs);
    if (*profile) run_profile(pa);
  } catch (const vecfad::domain_error& e) {
    return fail(2, e.what());
  } catch (const vecfad::param_error& e) {
    return fail(2, e.what());
  } catch (const vecfad::shape_error& e) {
    return fail(2, e.what());
  } catch (const vecfad::range_error& e) {
    return fail(2, e.what());
  } catch (const vecfad::parse_error& e) {
    return fail(3, e.what());
  } catch (const vecfad::validation_error& e) {
    return fail(3, e.what());
  } catch (const std::exception& e) {
    return fail(1, e.what());
  }
  return 0;
}

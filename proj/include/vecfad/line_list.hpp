#pragma once

// Minimal line-list ingestion and Voigt superposition.
//
// Input is CSV with the header `nu0,alphaL,alphaD,strength`; one spectral
// line per row, widths as HWHM in the same wavenumber units as nu0.

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vecfad/csv.hpp"
#include "vecfad/errors.hpp"
#include "vecfad/evaluator.hpp"

namespace vecfad {

struct line_record {
  double nu0 = 0.0;
  double alpha_lorentz = 0.0;
  double alpha_doppler = 0.0;
  double strength = 0.0;
};

using warning_sink = std::function<void(std::string_view)>;

inline void warn_to_stderr(std::string_view msg) { std::cerr << "warning: " << msg << '\n'; }

inline std::vector<line_record> parse_lines(std::istream& is,
                                            const warning_sink& warn = warn_to_stderr) {
  std::vector<line_record> out;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(is, line)) {
    ++line_no;
    const auto text = csv::trim(line);
    if (text.empty() || text.front() == '#') continue;
    if (!header_seen) {
      if (text != "nu0,alphaL,alphaD,strength") {
        throw parse_error(line_no, 1, "expected header 'nu0,alphaL,alphaD,strength'");
      }
      header_seen = true;
      continue;
    }
    const auto fields = csv::split(text);
    if (fields.size() != 4) {
      throw parse_error(line_no, 1,
                        "expected 4 fields, got " + std::to_string(fields.size()));
    }
    line_record r;
    r.nu0 = csv::parse_double(fields[0], line_no);
    r.alpha_lorentz = csv::parse_double(fields[1], line_no);
    r.alpha_doppler = csv::parse_double(fields[2], line_no);
    r.strength = csv::parse_double(fields[3], line_no);
    if (!std::isfinite(r.nu0)) throw validation_error("nu0", line_no, "must be finite");
    if (!(r.alpha_lorentz >= 0.0) || !std::isfinite(r.alpha_lorentz)) {
      throw validation_error("alphaL", line_no, "must be finite and >= 0");
    }
    if (!(r.alpha_doppler > 0.0) || !std::isfinite(r.alpha_doppler)) {
      throw validation_error("alphaD", line_no, "must be finite and > 0");
    }
    if (!(r.strength >= 0.0) || !std::isfinite(r.strength)) {
      throw validation_error("strength", line_no, "must be finite and >= 0");
    }
    out.push_back(r);
  }
  if (out.empty()) warn(header_seen ? "line list has no records" : "line list is empty");
  return out;
}

inline std::vector<line_record> ingest_lines(const std::string& path,
                                             const warning_sink& warn = warn_to_stderr) {
  std::ifstream in(path);
  if (!in) throw parse_error(0, 0, "cannot open line list '" + path + "'");
  return parse_lines(in, warn);
}

/// sum_lines strength * g_V(nu - nu0) at every frequency, one evaluate call
/// per line.
inline std::vector<double> superpose_profiles(std::span<const line_record> lines,
                                              std::span<const double> freqs,
                                              const grid_spec& spec = {}) {
  std::vector<double> total(freqs.size(), 0.0);
  for (const auto& line : lines) {
    const auto g = voigt_profile(freqs, line.nu0, line.alpha_lorentz, line.alpha_doppler, spec);
    for (std::size_t i = 0; i < total.size(); ++i) total[i] += line.strength * g[i];
  }
  return total;
}

}  // namespace vecfad

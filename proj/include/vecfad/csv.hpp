#pragma once

#include <charconv>
#include <cstdio>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "vecfad/errors.hpp"

namespace vecfad::csv {

/// Shortest form that reads back bit-identical (17 significant digits).
inline std::string format_exact(double v) {
  char buf[32];
  const int n = std::snprintf(buf, sizeof buf, "%.17g", v);
  return std::string(buf, static_cast<std::size_t>(n));
}

inline std::string format_digits(double v, int digits) {
  char buf[48];
  const int n = std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return std::string(buf, static_cast<std::size_t>(n));
}

struct field {
  std::string_view text;
  std::size_t column;  // 1-based character column of the field start
};

inline std::vector<field> split(std::string_view line) {
  std::vector<field> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    const std::size_t end = (comma == std::string_view::npos) ? line.size() : comma;
    out.push_back({line.substr(start, end - start), start + 1});
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

/// Parses a double; the whole (trimmed) field must be consumed.
inline double parse_double(const field& f, std::size_t line) {
  const std::string_view t = trim(f.text);
  double v = 0.0;
  const char* begin = t.data();
  const char* end = t.data() + t.size();
  if (!t.empty() && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, v);
  if (t.empty() || ec != std::errc{} || ptr != end) {
    throw parse_error(line, f.column, "expected a number, got '" + std::string(t) + "'");
  }
  return v;
}

}  // namespace vecfad::csv

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vecfad {

/// Which argument violated the working domain |x| <= bound, |y| >= 1e-8.
enum class domain_axis { x, y };

/// Input outside the HITRAN working domain. The message always carries the
/// phrase "beyond HITRAN range" so callers and the CLI can surface it verbatim.
class domain_error : public std::domain_error {
public:
  domain_error(domain_axis axis, const std::string& detail)
      : std::domain_error("x or y is beyond HITRAN range! " + detail),
        axis_(axis) {}

  domain_axis axis() const noexcept { return axis_; }

private:
  domain_axis axis_;
};

/// Malformed request shape, e.g. an empty abscissa vector.
class shape_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Invalid physical or numerical parameter (non-positive width, bad count, ...).
class param_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Spline query outside the knot span.
class range_error : public std::out_of_range {
public:
  range_error(double value, const std::string& what)
      : std::out_of_range(what), value_(value) {}

  double value() const noexcept { return value_; }

private:
  double value_;
};

/// Iterative procedure exhausted its budget.
class convergence_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Text input that could not be tokenized or converted.
class parse_error : public std::runtime_error {
public:
  parse_error(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// Syntactically fine record whose field value is not admissible.
class validation_error : public std::runtime_error {
public:
  validation_error(std::string field, std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": field '" +
                           field + "': " + what),
        field_(std::move(field)),
        line_(line) {}

  const std::string& field() const noexcept { return field_; }
  std::size_t line() const noexcept { return line_; }

private:
  std::string field_;
  std::size_t line_;
};

}  // namespace vecfad

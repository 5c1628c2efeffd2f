#pragma once

#include <stdexcept>
#include <string>

namespace rlw {

// Invalid parameter or configuration value.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Vector length does not match the grid.
class ShapeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numerical consistency check failed (imaginary residue, negative radicand).
class NumericsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Linear solve did not reach the requested residual, or the system was singular.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, double residual, int iterations)
      : std::runtime_error(what), residual(residual), iterations(iterations) {}
  double residual;
  int iterations;
};

// Startup fixed-point iteration did not converge.
class StartupError : public std::runtime_error {
 public:
  StartupError(const std::string& what, double last_increment)
      : std::runtime_error(what), last_increment(last_increment) {}
  double last_increment;
};

// Config text could not be parsed or validated.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line_number)
      : std::runtime_error(what + " (line " + std::to_string(line_number) + ")"),
        line_number(line_number) {}
  int line_number;
};

}  // namespace rlw

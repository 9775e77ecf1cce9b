#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grp {

/// A state lost positivity (rho <= 0 or p <= 0). Carries the failing cell
/// index when the error arose inside a grid update, -1 otherwise.
class NonPhysicalState : public std::runtime_error {
 public:
  explicit NonPhysicalState(const std::string& what, std::ptrdiff_t cell = -1)
      : std::runtime_error(what), cell_index(cell) {}
  std::ptrdiff_t cell_index;
};

/// The Riemann data generates vacuum (2c_L/(g-1) + 2c_R/(g-1) <= u_R - u_L).
class VacuumFormation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Star-pressure iteration exceeded its step budget.
class NoConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A side-coefficient routine was called for the wrong wave family.
class WrongWaveKind : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The 2x2 kinematic-thermodynamic system is numerically singular.
class SingularSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed config file syntax.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line_number)
      : std::runtime_error(what + " (line " + std::to_string(line_number) + ")"),
        line(line_number) {}
  int line;
};

/// A config key or value is out of contract.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& offending_key, const std::string& what)
      : std::runtime_error("key '" + offending_key + "': " + what), key(offending_key) {}
  std::string key;
};

}  // namespace grp

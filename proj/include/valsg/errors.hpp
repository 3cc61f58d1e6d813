#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace valsg {

// Mismatched shapes: group signatures, variable lists, exponent lengths.
struct structural_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Mathematically invalid input (non-containment, zero valuation argument, ...).
struct domain_error : std::domain_error {
  using std::domain_error::domain_error;
};

// A truncated object was asked for information beyond its precision.
struct precision_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An enumeration could not be certified complete.
struct incomplete_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const noexcept { return pos_; }

private:
  std::size_t pos_;
};

}  // namespace valsg

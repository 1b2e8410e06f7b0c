#pragma once

#include <stdexcept>
#include <string>

namespace grm {

// Raised when a computation would exceed one of the enumeration guards
// (q^n points, q^dim codewords, coset counts, GL_m sizes).
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised on mismatched (q, m) between operands or malformed points.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace grm

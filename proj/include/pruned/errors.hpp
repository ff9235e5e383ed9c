#pragma once

#include <stdexcept>
#include <string>

namespace pruned {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Mismatched ambient variable counts.
struct DimensionError : Error {
  explicit DimensionError(const std::string& msg) : Error(msg) {}
};

// A configured size cap was exceeded (2^q cells, face counts, oracle strands).
struct CapacityError : Error {
  explicit CapacityError(const std::string& msg) : Error(msg) {}
};

// An operation required a proper nonzero ideal but got the zero or unit ideal,
// or some other structurally invalid input (self-loop, non-squarefree, ...).
struct InvalidInputError : Error {
  explicit InvalidInputError(const std::string& msg) : Error(msg) {}
};

// Integer overflow in exponent arithmetic.
struct OverflowError : Error {
  explicit OverflowError(const std::string& msg) : Error(msg) {}
};

}  // namespace pruned

#pragma once

#include <stdexcept>
#include <string>

namespace pglind {

// Bad input: malformed label, violated precondition, size mismatch.
class ArgumentError : public std::invalid_argument {
public:
  explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

// Request exceeds a documented enumeration or integer-width envelope.
class CapacityError : public std::runtime_error {
public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical invariant failed (e.g. a non-integral multiplicity).
// Always signals a bug or a discrepancy in the formulas, never bad input.
class InvariantViolation : public std::logic_error {
public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace pglind

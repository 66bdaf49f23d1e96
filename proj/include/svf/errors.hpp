#pragma once

#include <stdexcept>
#include <string>

namespace svf {

/// Malformed or out-of-range input (bad type string, non-dominant weight, ...).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An internal consistency condition failed. Never a valid result.
class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string& invariant)
        : std::logic_error("invariant violated: " + invariant) {}
};

/// Raised by Levi decomposition when peeling leaves a negative residual,
/// i.e. the input was not the character of a module that is completely
/// reducible over the Levi.
class NotCompletelyReducible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace svf

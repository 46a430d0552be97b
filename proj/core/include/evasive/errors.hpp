#pragma once

#include <stdexcept>
#include <string>

namespace evasive {

// Bad arguments: out-of-range vertices, degree mismatches, malformed input.
struct InputError : std::invalid_argument {
    explicit InputError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A size/effort cap was exceeded (closure too large, too many faces, n too big
// for an exhaustive scan).  Deliberate rejection, not a resource failure.
struct CapError : std::runtime_error {
    explicit CapError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace evasive

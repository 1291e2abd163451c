#pragma once

#include <stdexcept>
#include <string>

namespace chabgraph {

// Malformed user input: bad files, unknown vertices, violated preconditions.
// The CLI maps this to exit status 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal consistency check failed. This always indicates a bug, never
// bad input. The CLI maps this to exit status 1.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

// Integer arithmetic left the representable range. All divisor and bound
// arithmetic is overflow-checked; we fail hard rather than wrap.
struct OverflowError : std::runtime_error {
    explicit OverflowError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace chabgraph

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arbor {

// Argument outside an operation's domain: degree mismatch, splitting a leaf, ...
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Computation would exceed a configured size, degree, or search budget.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed text given to one of the parsers. `position` is a byte offset.
struct ParseError : std::runtime_error {
    ParseError(const std::string& message, std::size_t pos)
        : std::runtime_error(message + " (at offset " + std::to_string(pos) + ")"),
          position(pos) {}

    std::size_t position;
};

}  // namespace arbor

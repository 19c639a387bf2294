#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hbn {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Subtraction or predecessor would go below zero.
struct UnderflowError : Error {
    using Error::Error;
};

// Argument outside an operation's domain (wrong parity, wrong node kind,
// zero where a positive value is required).
struct DomainError : Error {
    using Error::Error;
};

// A configured budget (decimal bits, iteration count) would be exceeded.
struct ResourceError : Error {
    using Error::Error;
};

// Malformed textual input; `position` is a 0-based byte offset.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

}  // namespace hbn

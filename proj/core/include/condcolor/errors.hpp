#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace condcolor {

/// Malformed or contract-violating input handed to a library operation.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Text-format error carrying the 1-based line it was detected on.
class ParseError : public InputError {
public:
    ParseError(std::size_t line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An exhaustive oracle was asked to run beyond its configured size bound.
class OracleBoundError : public std::length_error {
public:
    using std::length_error::length_error;
};

}  // namespace condcolor

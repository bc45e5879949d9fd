#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chains {

// Malformed formula text. `position` is the byte offset of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// A size limit (edge count, point count, enumeration size) was exceeded.
class CapExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

// A visibility triangle that no chain realizes.
class NotRealizable : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Point set with a collinear triple or repeated x-coordinate.
class DegenerateInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace chains

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace litbench {

// Base class for errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input. `location()` is the position the message refers to:
// a 1-based line number for line-oriented formats, a 0-based token index
// for token streams.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t location)
        : Error(message), location_(location) {}

    std::size_t location() const noexcept { return location_; }

private:
    std::size_t location_;
};

}  // namespace litbench

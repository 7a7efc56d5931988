#pragma once

#include <stdexcept>
#include <string>

namespace tsptw {

// Raised while reading instance files or decimal time literals.
struct ParseError : std::runtime_error {
    enum class Kind { Malformed, NonDecimal, Negative };

    ParseError(Kind k, const std::string& message) : std::runtime_error(message), kind(k) {}

    Kind kind;
};

}  // namespace tsptw

#pragma once

#include <stdexcept>
#include <string>

namespace fanotilt {

// Thrown when textual input (CLI specs, rationals, configs) cannot be parsed.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an operation is called outside its mathematical domain
// (unknown variety, violated integrality, hypothesis of a bound not met, ...).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fanotilt

#ifndef IMULT_ERRORS_HPP
#define IMULT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace imult {

// Error taxonomy maps onto the CLI exit codes:
//   usage_error / parse_error -> 1, math_error -> 2, internal_error -> 3.

struct usage_error : std::runtime_error {
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

struct parse_error : std::runtime_error {
    std::size_t offset;
    parse_error(const std::string& what, std::size_t at)
        : std::runtime_error(what), offset(at) {}
};

// Invalid mathematical request: division by zero, zero polynomial where a
// curve is required, gcd of two zero polynomials, ...
struct math_error : std::runtime_error {
    explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

// A violated invariant. Reaching this is a bug, not a user error.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace imult

#endif

#pragma once

#include <stdexcept>
#include <string>

namespace swlearn {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Word enumeration would exceed the configured budget.
struct CapacityError : Error {
    using Error::Error;
};

// Malformed spec file, DOT text, or report input.
struct ParseError : Error {
    using Error::Error;
};

} // namespace swlearn

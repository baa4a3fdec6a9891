#pragma once

#include <stdexcept>
#include <string>

namespace mdmat {

// Invalid arguments or semantic violations. CLI exit code 1.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text. CLI exit code 2.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An enumeration would exceed the configured budget. CLI exit code 4.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace mdmat

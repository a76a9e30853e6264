#pragma once

#include <stdexcept>
#include <string>

namespace witt {

// Base for all errors thrown by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed user input: bad literals, shape mismatches, violated call
// preconditions that originate from user-supplied data. CLI exit code 2.
struct input_error : error {
    using error::error;
};

// Arithmetic domain violations: division by zero, coefficient lookups
// outside a map's stored domain.
struct domain_error : error {
    using error::error;
};

// A redundant internal cross-check failed. Indicates a bug in the tool
// (or a falsified imported fact), never a user mistake.
struct internal_error : error {
    using error::error;
};

} // namespace witt

#pragma once

#include <stdexcept>
#include <string>

namespace grateid {

/// Base class for all errors raised by this library. Subclasses distinguish
/// validation problems (bad inputs, missing channels) from numerical failures.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid or inconsistent user input (maps to CLI exit code 1).
struct ValidationError : Error {
    using Error::Error;
};

/// Numerical failure while computing (maps to CLI exit code 2).
struct NumericalError : Error {
    using Error::Error;
};

} // namespace grateid

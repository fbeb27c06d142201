#pragma once

#include <stdexcept>
#include <string>

namespace cobham {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A word contains a digit outside the automaton's alphabet.
struct InvalidDigitError : Error {
    using Error::Error;
};

/// A precondition on arguments was violated.
struct InvalidArgumentError : Error {
    using Error::Error;
};

/// A configurable cap (reversal states, witness search, approximation scan)
/// was exceeded.
struct ResourceLimitError : Error {
    using Error::Error;
};

/// represent_in_window was asked for a value outside [0, 2*base^n].
struct WindowOverflowError : Error {
    using Error::Error;
};

/// The overlap precondition of the local-period merge failed.
struct MergeError : Error {
    using Error::Error;
};

/// Malformed automaton or certificate file, or malformed numeric token.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace cobham

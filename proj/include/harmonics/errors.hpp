#pragma once

#include <stdexcept>
#include <string>

namespace harmonics {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual or JSON input (bad token, wrong field type, truncated file).
struct ParseError : Error {
    using Error::Error;
};

// A parameter is outside the domain of an operation (odd order where an even
// one is required, size mismatch, out-of-range index).
struct DomainError : Error {
    using Error::Error;
};

// Well-formed data that fails a required property (a grid that is not
// harmonic, a board that is not a valid sudoku, a missing symmetry).
struct VerificationError : Error {
    using Error::Error;
};

// A construction could not complete or produced something that fails its own
// postcondition; indicates a bug or an input outside the theory's reach.
struct ConstructionError : Error {
    using Error::Error;
};

} // namespace harmonics

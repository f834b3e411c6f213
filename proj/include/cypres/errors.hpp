#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cypres {

// Base of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the domain of an operation (named condition in the message).
struct DomainError : Error {
    using Error::Error;
};

// A zero polynomial where a nonzero one is required.
struct ZeroPolynomial : Error {
    using Error::Error;
};

// Exact polynomial division left a remainder or a fractional coefficient.
struct NotDivisible : Error {
    using Error::Error;
};

// Malformed textual input; `offset` is the byte position of the violation.
struct SyntaxError : Error {
    std::size_t offset;
    SyntaxError(const std::string& what, std::size_t off)
        : Error(what + " at offset " + std::to_string(off)), offset(off) {}
};

// Negative generator index in a cyclic word.
struct IndexError : Error {
    using Error::Error;
};

// The floating-point sanity check could not separate the two root moduli.
struct NumericInstability : Error {
    using Error::Error;
};

// A coefficient outgrew the CYPRES_MAX_BITS safety valve.
struct LimitExceeded : Error {
    using Error::Error;
};

}  // namespace cypres

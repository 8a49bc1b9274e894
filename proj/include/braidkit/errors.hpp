#pragma once

#include <stdexcept>
#include <string>

namespace braidkit {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed token in a word or presentation string.
struct ParseError : Error {
    using Error::Error;
};

/// Generator or strand index outside the valid range for the ambient group.
struct IndexOutOfRange : Error {
    using Error::Error;
};

/// Two operands live in braid groups with different strand counts.
struct StrandMismatch : Error {
    using Error::Error;
};

/// Cyclic-subgroup membership was asked for a generator with exponent sum zero.
struct ZeroExponent : Error {
    using Error::Error;
};

/// A search precondition requires the input not to commute with the conjugating element.
struct CommutingInput : Error {
    using Error::Error;
};

/// A configured cap on search-set growth was exceeded.
struct ResourceLimit : Error {
    using Error::Error;
};

/// Protocol parameters violate their invariants.
struct ParamError : Error {
    using Error::Error;
};

}  // namespace braidkit

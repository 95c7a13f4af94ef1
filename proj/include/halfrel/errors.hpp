#pragma once

#include <stdexcept>
#include <string>

namespace halfrel {

// Base of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user input: zero tuple entries, out-of-range parameters, malformed text.
struct UsageError : Error {
    using Error::Error;
};

// A structural invariant failed. Never expected; signals a bug.
struct InvariantError : Error {
    using Error::Error;
};

struct DivisibilityError : InvariantError {
    using InvariantError::InvariantError;
};

struct CertificateFailure : InvariantError {
    using InvariantError::InvariantError;
};

struct ZeroArg : UsageError {
    using UsageError::UsageError;
};

struct ZeroQ : UsageError {
    ZeroQ() : UsageError("q must be nonzero") {}
};

struct NotAHalfRelation : Error {
    using Error::Error;
};

struct WrongLength : UsageError {
    using UsageError::UsageError;
};

struct SquareInput : UsageError {
    using UsageError::UsageError;
};

struct DegenerateQuadratic : UsageError {
    using UsageError::UsageError;
};

struct ZeroDenominator : UsageError {
    using UsageError::UsageError;
};

struct BadParams : UsageError {
    using UsageError::UsageError;
};

struct IndexTooSmall : UsageError {
    using UsageError::UsageError;
};

struct BadDigit : UsageError {
    using UsageError::UsageError;
};

struct ParseError : UsageError {
    using UsageError::UsageError;
};

}  // namespace halfrel

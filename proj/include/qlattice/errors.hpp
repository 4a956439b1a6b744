#pragma once

#include <stdexcept>
#include <string>

namespace qlat {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Matrix/vector dimensions do not match.
struct ShapeError : Error {
    using Error::Error;
};

/// Input violates a mathematical precondition (non-unitary, zero vector, ...).
struct DomainError : Error {
    using Error::Error;
};

/// Malformed input file.
struct ParseError : Error {
    using Error::Error;
};

struct NotHermitianError : DomainError {
    double residual;
    explicit NotHermitianError(double res)
        : DomainError("matrix is not Hermitian (residual " + std::to_string(res) + ")"),
          residual(res) {}
};

struct NotIdempotentError : DomainError {
    double residual;
    explicit NotIdempotentError(double res)
        : DomainError("matrix is not idempotent (residual " + std::to_string(res) + ")"),
          residual(res) {}
};

/// An operation required a nonzero projection.
struct ZeroProjectionError : DomainError {
    ZeroProjectionError() : DomainError("operation requires a nonzero projection") {}
};

/// Conditioning on a projection of probability ~0.
struct ConditioningOnNullError : DomainError {
    ConditioningOnNullError() : DomainError("cannot condition on a projection with vanishing probability") {}
};

/// A stated precondition of a check was violated by the arguments.
struct PreconditionError : DomainError {
    using DomainError::DomainError;
};

}  // namespace qlat

#pragma once

#include <stdexcept>
#include <string>

namespace idemsys {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
    using Error::Error;
};
struct DivisionByZeroError : Error {
    using Error::Error;
};
struct OrderMismatchError : Error {
    using Error::Error;
};
struct SingularMatrixError : Error {
    using Error::Error;
};
struct ShapeError : Error {
    using Error::Error;
};
struct NotSymmetricError : Error {
    using Error::Error;
};
struct AmbiguousFormError : Error {
    using Error::Error;
};
struct ZeroParameterError : Error {
    using Error::Error;
};
struct NotInAlgebraError : Error {
    using Error::Error;
};
struct NotInE0VError : Error {
    using Error::Error;
};
struct InvariantViolationError : Error {
    using Error::Error;
};
struct TableMismatchError : Error {
    using Error::Error;
};
struct NotPPolynomialError : Error {
    using Error::Error;
};
struct NotPQPolynomialError : Error {
    using Error::Error;
};
struct DimensionTooSmallError : Error {
    using Error::Error;
};
struct CertificateError : Error {
    using Error::Error;
};
struct SingularEigenmatrixError : Error {
    using Error::Error;
};
struct EigenmatrixError : Error {
    using Error::Error;
};

// Raised when two independent computation routes disagree; always a bug,
// either here or in the input data that was claimed to be validated.
struct ConsistencyError : Error {
    using Error::Error;
};

}  // namespace idemsys

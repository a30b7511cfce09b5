#pragma once

#include <stdexcept>
#include <string>

namespace qhsa {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in different fields (or different algebras).
class FieldMismatchError : public Error {
public:
    using Error::Error;
};

class DivisionByZeroError : public Error {
public:
    using Error::Error;
};

/// Shape violations: arity mismatch, index out of range, bad permutation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A tensor element or linear map has no inverse.
class SingularError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error {
public:
    using Error::Error;
};

/// A construction whose result is verified internally failed its verification.
class VerificationError : public Error {
public:
    using Error::Error;
};

} // namespace qhsa

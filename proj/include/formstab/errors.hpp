#pragma once

#include <stdexcept>
#include <string>

namespace formstab {

/// Base class for all library errors. The CLI maps the subclasses to exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shape or size violates a contract (non-square, odd-sized skew form, mismatch).
class InvalidDimensionError : public Error {
public:
    using Error::Error;
};

/// Input is numerically singular where an invertible matrix is required.
class SingularInputError : public Error {
public:
    using Error::Error;
};

/// Matrix is neither symmetric nor skew-symmetric within tolerance, or has the
/// wrong kind for the requested operation.
class FormKindError : public Error {
public:
    using Error::Error;
};

/// Argument outside the documented domain (empty sample list, bad permutation, ...).
class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

/// File could not be read, written, or parsed.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace formstab

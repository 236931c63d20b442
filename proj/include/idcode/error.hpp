#pragma once

#include <stdexcept>
#include <string>

namespace idcode {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Exact arithmetic left the 64-bit range.
class OverflowError : public Error {
public:
    using Error::Error;
};

}  // namespace idcode

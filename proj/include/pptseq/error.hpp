#pragma once

#include <stdexcept>
#include <string>

namespace pptseq {

/// Base for every error raised by the library. The CLI maps the concrete
/// subclasses onto its exit-code contract.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller supplied an argument outside an operation's domain.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A computation would exceed the fixed integer width.
class OverflowError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace pptseq

#pragma once

#include <stdexcept>
#include <string>

namespace moishezon {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain (bad dimension, rank, arity...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A divisor class is not an integer multiple of the requested generator.
class NotProportional : public Error {
public:
    using Error::Error;
};

/// A serialized document does not match the expected schema.
class SchemaError : public Error {
public:
    using Error::Error;
};

}  // namespace moishezon

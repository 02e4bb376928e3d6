#pragma once

#include <stdexcept>
#include <string>

namespace rwg {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownEnvironmentError : public Error {
public:
    explicit UnknownEnvironmentError(const std::string& name)
        : Error("unknown environment: " + name) {}
};

class InvalidActionError : public Error {
public:
    using Error::Error;
};

class StepAfterDoneError : public Error {
public:
    using Error::Error;
};

class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

class InvalidArchitectureError : public Error {
public:
    using Error::Error;
};

/// Numeric argument outside its documented domain (percentile q, fractions,
/// probabilities).
class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

class EmptyInputError : public Error {
public:
    using Error::Error;
};

class NoFiniteWaitingTimeError : public Error {
public:
    NoFiniteWaitingTimeError()
        : Error("waiting time is not finite for solve probability 0") {}
};

/// Non-finite value where a finite one is required. Episodes abort on such
/// values rather than recording a sentinel score.
class NumericalError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

/// Base class for malformed tensor files.
class TensorFormatError : public Error {
public:
    using Error::Error;
};

class BadMagicError : public TensorFormatError {
public:
    using TensorFormatError::TensorFormatError;
};

class UnsupportedVersionError : public TensorFormatError {
public:
    using TensorFormatError::TensorFormatError;
};

class TruncatedPayloadError : public TensorFormatError {
public:
    using TensorFormatError::TensorFormatError;
};

class InvalidPlotSpecError : public Error {
public:
    using Error::Error;
};

}  // namespace rwg

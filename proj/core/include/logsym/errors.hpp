#pragma once

#include <stdexcept>
#include <string>

namespace logsym {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Data outside the positive support.
class NonPositiveValueError : public Error {
public:
    using Error::Error;
};

// Input contains NaN or +/-inf.
class NonFiniteValueError : public Error {
public:
    using Error::Error;
};

// Fewer observations than the operation admits.
class TooFewObservationsError : public Error {
public:
    using Error::Error;
};

// Sample too small for the requested kernel degree.
class SampleTooSmallError : public Error {
public:
    using Error::Error;
};

// Kernel invoked with the wrong number of points.
class WrongArityError : public Error {
public:
    using Error::Error;
};

// Argument outside the mathematical domain of a special function.
class DomainError : public Error {
public:
    using Error::Error;
};

// All jackknife pseudo-values identical; the normal test is undefined.
class DegenerateVarianceError : public Error {
public:
    using Error::Error;
};

// All observations identical; no spread to fit.
class DegenerateSampleError : public Error {
public:
    using Error::Error;
};

// Distribution or kernel parameter outside its valid range.
class InvalidParameterError : public Error {
public:
    using Error::Error;
};

// Inconsistent or unusable simulation configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

// File could not be read or written.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace logsym

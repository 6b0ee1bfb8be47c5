#pragma once

#include <stdexcept>
#include <string>

namespace borninfeld {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Non-finite or otherwise malformed input.
class InvalidInputError : public Error {
public:
    explicit InvalidInputError(const std::string& msg) : Error(msg) {}
};

/// Input outside the mathematical domain of an operation
/// (e.g. field strength at or beyond the Born saturation bound).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Evaluation at a point-charge location.
class SingularityError : public DomainError {
public:
    explicit SingularityError(const std::string& msg) : DomainError(msg) {}
};

/// Quadrature failed to reach the requested tolerance within budget.
/// Carries the error estimate that was actually achieved.
class AccuracyError : public Error {
public:
    AccuracyError(const std::string& msg, double achieved)
        : Error(msg), achieved_error(achieved) {}
    double achieved_error;
};

/// Bad grid geometry or run configuration.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

/// File-system failure while reading or writing artifacts.
class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

} // namespace borninfeld

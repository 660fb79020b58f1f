#pragma once

#include <stdexcept>
#include <string>

namespace ardlkit {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad configuration, bad arguments, schema violations. CLI exit code 1.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

/// Problems with the data itself: parse failures, integrity violations,
/// domain errors (log of a non-positive value), insufficient or disjoint
/// samples. CLI exit code 2.
class DataError : public Error {
public:
    explicit DataError(const std::string& msg) : Error(msg) {}
};

/// Numerical failures: singular designs, failed decompositions, diverging
/// simulations. CLI exit code 3.
class NumericError : public Error {
public:
    explicit NumericError(const std::string& msg) : Error(msg) {}
};

}  // namespace ardlkit

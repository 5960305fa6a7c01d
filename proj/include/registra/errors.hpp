#pragma once

#include <stdexcept>
#include <string>

namespace registra {

// Error taxonomy mirrored by the C API status codes and CLI exit codes:
// input/config/data problems vs. numerical failures.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad user input: missing files, malformed manifests, empty samples,
// unknown groups, invalid configuration.
class InputError : public Error {
public:
    using Error::Error;
};

// Numerical failure: zero-variance columns, solver non-convergence,
// non-finite values where finite ones are required.
class NumericalError : public Error {
public:
    using Error::Error;
};

} // namespace registra

#pragma once

#include <stdexcept>
#include <string>

namespace propp {

// Base class for every error raised by the library. The CLI maps any
// propp::Error to exit status 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// Work or memory would exceed a configured budget.
class ResourceError : public Error {
public:
    using Error::Error;
};

// An integer result does not fit the 128-bit element width.
class OverflowError : public Error {
public:
    using Error::Error;
};

// Malformed input (sequence files, decimal literals).
class FormatError : public Error {
public:
    using Error::Error;
};

} // namespace propp
